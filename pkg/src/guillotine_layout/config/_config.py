"""Layered configuration for guillotine-layout."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "SolverConfig",
    "configure",
    "get_global_config",
    "resolve_config",
    "_reset_global_config",
    "_set_global_config",
]


@dataclass(frozen=True, slots=True)
class SolverConfig:
    """Solver settings with merge semantics (global -> call site).

    Attributes:
        brute_force_max_n: Largest ``n`` the set-partition enumerator accepts.
        feasibility_tolerance: Additive slack on layer-height interval
            membership in the decision procedure.
        violation_tolerance: Additive slack when checking MIP rows.
        binary_search_gap: The binary search stops once ``up - low`` falls
            below this gap.
        bound_tolerance: Relative slack when comparing a floating-point node
            bound against the exact incumbent value.
        time_limit: Default wall-clock limit in seconds (``None`` = none).
        poll_interval: Nodes between two time-limit checks.
        dp_max_sum: Largest total accepted by the subset-sum oracle.
        log_search_progress: Log incumbent improvements at DEBUG level.

    Example::

        config = SolverConfig(brute_force_max_n=10)
        strict = config.merge(feasibility_tolerance=0.0)
    """

    brute_force_max_n: int = 12
    feasibility_tolerance: float = 1e-9
    violation_tolerance: float = 1e-6
    binary_search_gap: float = 0.01
    bound_tolerance: float = 1e-11
    time_limit: float | None = None
    poll_interval: int = 1024
    dp_max_sum: int = 10**6
    log_search_progress: bool = False

    def __post_init__(self) -> None:
        if self.brute_force_max_n < 1:
            raise ValueError(f"brute_force_max_n must be >= 1, got {self.brute_force_max_n!r}")
        if self.feasibility_tolerance < 0:
            raise ValueError(
                f"feasibility_tolerance must be >= 0, got {self.feasibility_tolerance!r}"
            )
        if self.violation_tolerance < 0:
            raise ValueError(
                f"violation_tolerance must be >= 0, got {self.violation_tolerance!r}"
            )
        if self.binary_search_gap <= 0:
            raise ValueError(f"binary_search_gap must be > 0, got {self.binary_search_gap!r}")
        if not 0 <= self.bound_tolerance < 1:
            raise ValueError(f"bound_tolerance must be in [0, 1), got {self.bound_tolerance!r}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be > 0 or None, got {self.time_limit!r}")
        if self.poll_interval < 1:
            raise ValueError(f"poll_interval must be >= 1, got {self.poll_interval!r}")
        if self.dp_max_sum < 1:
            raise ValueError(f"dp_max_sum must be >= 1, got {self.dp_max_sum!r}")

    def merge(
        self,
        *,
        brute_force_max_n: int | None = None,
        feasibility_tolerance: float | None = None,
        violation_tolerance: float | None = None,
        binary_search_gap: float | None = None,
        bound_tolerance: float | None = None,
        time_limit: float | None = None,
        poll_interval: int | None = None,
        dp_max_sum: int | None = None,
        log_search_progress: bool | None = None,
    ) -> SolverConfig:
        """Return a new config with non-None overrides applied.

        ``time_limit`` cannot be reset to ``None`` through ``merge``; build a
        fresh ``SolverConfig`` for that.

        Returns:
            A new ``SolverConfig`` with overrides merged.

        Example::

            base = SolverConfig()
            ci = base.merge(brute_force_max_n=9, time_limit=30.0)
        """
        return SolverConfig(
            brute_force_max_n=(
                brute_force_max_n if brute_force_max_n is not None else self.brute_force_max_n
            ),
            feasibility_tolerance=(
                feasibility_tolerance
                if feasibility_tolerance is not None
                else self.feasibility_tolerance
            ),
            violation_tolerance=(
                violation_tolerance
                if violation_tolerance is not None
                else self.violation_tolerance
            ),
            binary_search_gap=(
                binary_search_gap if binary_search_gap is not None else self.binary_search_gap
            ),
            bound_tolerance=(
                bound_tolerance if bound_tolerance is not None else self.bound_tolerance
            ),
            time_limit=(time_limit if time_limit is not None else self.time_limit),
            poll_interval=(poll_interval if poll_interval is not None else self.poll_interval),
            dp_max_sum=(dp_max_sum if dp_max_sum is not None else self.dp_max_sum),
            log_search_progress=(
                log_search_progress
                if log_search_progress is not None
                else self.log_search_progress
            ),
        )


# ---------------------------------------------------------------------------
# Global configuration singleton
# ---------------------------------------------------------------------------

_global_config = SolverConfig()


def get_global_config() -> SolverConfig:
    """Return the current global configuration.

    Example::

        config = get_global_config()
        print(config.brute_force_max_n)  # 12
    """
    return _global_config


def configure(
    *,
    brute_force_max_n: int | None = None,
    feasibility_tolerance: float | None = None,
    violation_tolerance: float | None = None,
    binary_search_gap: float | None = None,
    bound_tolerance: float | None = None,
    time_limit: float | None = None,
    poll_interval: int | None = None,
    dp_max_sum: int | None = None,
    log_search_progress: bool | None = None,
) -> SolverConfig:
    """Update the global configuration by merging overrides.

    Only non-None values are applied. Returns the new global config.

    Example::

        configure(brute_force_max_n=9)
        # brute_force() now refuses instances with more than 9 rectangles
    """
    global _global_config
    _global_config = _global_config.merge(
        brute_force_max_n=brute_force_max_n,
        feasibility_tolerance=feasibility_tolerance,
        violation_tolerance=violation_tolerance,
        binary_search_gap=binary_search_gap,
        bound_tolerance=bound_tolerance,
        time_limit=time_limit,
        poll_interval=poll_interval,
        dp_max_sum=dp_max_sum,
        log_search_progress=log_search_progress,
    )
    return _global_config


def resolve_config(config: SolverConfig | None) -> SolverConfig:
    """Return *config*, or the global config when it is ``None``."""
    return config if config is not None else _global_config


def _set_global_config(cfg: SolverConfig) -> None:
    """Replace global config with an exact snapshot. For testing only."""
    global _global_config
    _global_config = cfg


def _reset_global_config() -> None:
    """Reset global config to defaults. For testing only."""
    global _global_config
    _global_config = SolverConfig()
