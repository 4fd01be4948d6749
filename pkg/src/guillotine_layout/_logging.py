"""Logging of search outcomes, incumbent updates and generator fallbacks."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from guillotine_layout.exact._models import SearchStats

__all__ = [
    "log_binary_search_step",
    "log_generator_fallback",
    "log_incumbent",
    "log_search_summary",
    "logger",
    "search_logger",
]

logger = logging.getLogger("guillotine_layout")


def search_logger(solver: str) -> logging.Logger:
    """Return the sub-logger ``guillotine_layout.search.<solver>``.

    Each solver logs under its own name so operators can raise or lower
    the verbosity of one search without touching the others.
    """
    return logger.getChild(f"search.{solver}")


def log_search_summary(*, solver: str, n: int, stats: SearchStats) -> None:
    """Log the outcome of a finished search.

    Logging levels:
    - INFO: Summary (solver, n, nodes, status, bounds, time)
    - WARNING: Search stopped at the time limit with an unproven result

    Example::

        log_search_summary(solver="peri-max-bb", n=inst.n, stats=stats)
    """
    sub = search_logger(solver)
    if stats.status == "TimeLimit":
        sub.warning(
            "%s stopped at time limit after %d nodes (n=%d): lb=%s ub=%s",
            solver,
            stats.nodes,
            n,
            _fmt(stats.bound_lb),
            _fmt(stats.bound_ub),
        )
        return
    sub.info(
        "%s finished: status=%s n=%d nodes=%d lb=%s ub=%s time=%.3fs",
        solver,
        stats.status,
        n,
        stats.nodes,
        _fmt(stats.bound_lb),
        _fmt(stats.bound_ub),
        stats.elapsed,
    )


def log_incumbent(*, solver: str, value: Fraction | float, nodes: int) -> None:
    """Log an incumbent improvement at DEBUG level."""
    sub = search_logger(solver)
    if sub.isEnabledFor(logging.DEBUG):
        sub.debug("%s new incumbent %s at node %d", solver, _fmt(value), nodes)


def log_binary_search_step(*, phi_mid: float, feasible: bool, low: float, up: float) -> None:
    """Log one bisection step at DEBUG level."""
    sub = search_logger("aspect-binsearch")
    if sub.isEnabledFor(logging.DEBUG):
        sub.debug(
            "phi=%.6f %s, interval now [%.6f, %.6f]",
            phi_mid,
            "feasible" if feasible else "infeasible",
            low,
            up,
        )


def log_generator_fallback(*, instance_name: str, detail: str) -> None:
    """Log a deviation of the instance generator from its primary recipe."""
    logger.getChild("instances").warning(
        "generator fallback for %s: %s", instance_name, detail
    )


def _fmt(value: Fraction | float | None) -> str:
    if value is None:
        return "-"
    return f"{float(value):.6g}"
