"""Data models for exact search results."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from guillotine_layout._types import SearchStatus
from guillotine_layout.core import Partition

__all__ = [
    "BinarySearchTrace",
    "HeightInterval",
    "INFEASIBLE",
    "Infeasible",
    "SearchStats",
]


@dataclass(frozen=True, slots=True)
class HeightInterval:
    """Closed range of layer heights that keeps one rectangle acceptable.

    Attributes:
        lo: Smallest admissible layer height (``> 0``).
        hi: Largest admissible layer height.
        rect: 0-based index of the rectangle, or ``-1`` when detached.
    """

    lo: float
    hi: float
    rect: int = -1

    def __post_init__(self) -> None:
        if not 0 < self.lo <= self.hi:
            raise ValueError(f"HeightInterval needs 0 < lo <= hi, got [{self.lo}, {self.hi}]")

    def contains(self, h: float, tolerance: float = 0.0) -> bool:
        return self.lo - tolerance <= h <= self.hi + tolerance

    def for_rect(self, rect: int) -> HeightInterval:
        return HeightInterval(self.lo, self.hi, rect)


class Infeasible:
    """Sentinel returned when no height or partition satisfies a bound."""

    _instance: Infeasible | None = None

    def __new__(cls) -> Infeasible:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __bool__(self) -> bool:
        return False


INFEASIBLE = Infeasible()


@dataclass(frozen=True, slots=True)
class SearchStats:
    """Outcome counters of one exact search.

    Attributes:
        nodes: Branch-and-bound nodes visited (root excluded).
        elapsed: Wall-clock seconds.
        bound_lb: Proven lower bound on the optimum, if any.
        bound_ub: Objective value of the returned partition, if any.
        status: ``"Optimal"``, ``"TimeLimit"`` or ``"Infeasible"``.
    """

    nodes: int
    elapsed: float
    bound_lb: Fraction | float | None
    bound_ub: Fraction | float | None
    status: SearchStatus

    def __post_init__(self) -> None:
        if (
            self.bound_lb is not None
            and self.bound_ub is not None
            and self.bound_lb > self.bound_ub
        ):
            raise ValueError(f"bound_lb {self.bound_lb} exceeds bound_ub {self.bound_ub}")

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary."""
        return {
            "nodes": self.nodes,
            "elapsed": self.elapsed,
            "lb": _number(self.bound_lb),
            "ub": _number(self.bound_ub),
            "status": self.status,
        }


@dataclass(slots=True)
class BinarySearchTrace:
    """Bisection history of the aspect-ratio search.

    Attributes:
        iterations: ``(phi_mid, feasible)`` per tested midpoint.
        phi_low: Final lower end (never tested, or proven infeasible).
        phi_up: Final upper end, witnessed by ``incumbent``.
        incumbent: Best partition found.
    """

    phi_low: float
    phi_up: float
    incumbent: Partition
    iterations: list[tuple[float, bool]] = field(default_factory=list[tuple[float, bool]])

    def record(self, phi_mid: float, feasible: bool, witness: Partition | None = None) -> None:
        """Append one step and move the matching end of the interval."""
        self.iterations.append((phi_mid, feasible))
        if feasible:
            self.phi_up = phi_mid
            if witness is not None:
                self.incumbent = witness
        else:
            self.phi_low = phi_mid

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary."""
        return {
            "iterations": [{"phi": phi, "feasible": ok} for phi, ok in self.iterations],
            "phi_low": self.phi_low,
            "phi_up": self.phi_up,
            "incumbent": self.incumbent.to_one_based(),
        }


def _number(value: Fraction | float | None) -> str | float | None:
    if isinstance(value, Fraction):
        return str(value)
    return value
