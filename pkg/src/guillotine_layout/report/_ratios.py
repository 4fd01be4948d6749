"""Cross-objective evaluation: how an optimum of one objective scores on another."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from guillotine_layout.clws import solve_peri_sum
from guillotine_layout.config import SolverConfig
from guillotine_layout.core import Instance, ObjectiveKind, Partition, objective_key, realize
from guillotine_layout.exact import solve_aspect_exact_bb, solve_peri_max_bb

__all__ = [
    "COMPARED_OBJECTIVES",
    "RatioCell",
    "cross_eval",
    "exact_optima",
    "ratio_summary",
]

COMPARED_OBJECTIVES = (
    ObjectiveKind.PERI_SUM,
    ObjectiveKind.PERI_MAX,
    ObjectiveKind.ASPECT_RATIO,
)


@dataclass(frozen=True, slots=True)
class RatioCell:
    """``value_y(optimum of x) / value_y(optimum of y)``; at least 1 for true optima.

    Attributes:
        solved_as: Objective ``x`` the partition is optimal for.
        evaluated_as: Objective ``y`` it is scored with.
        ratio: Exact ratio.
    """

    solved_as: ObjectiveKind
    evaluated_as: ObjectiveKind
    ratio: Fraction

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary (ratio to 6 significant digits)."""
        return {
            "solved_as": self.solved_as.value,
            "evaluated_as": self.evaluated_as.value,
            "ratio": f"{float(self.ratio):.6g}",
        }


def exact_optima(
    instance: Instance,
    time_limit: float | None = None,
    *,
    config: SolverConfig | None = None,
) -> dict[ObjectiveKind, Partition]:
    """Optimal partitions for the three compared objectives.

    With a *time_limit* the max-objective entries may be incumbents only.
    """
    peri_sum, _ = solve_peri_sum(instance)
    peri_max, _ = solve_peri_max_bb(instance, time_limit, config=config)
    aspect, _ = solve_aspect_exact_bb(instance, time_limit, config=config)
    return {
        ObjectiveKind.PERI_SUM: peri_sum,
        ObjectiveKind.PERI_MAX: peri_max,
        ObjectiveKind.ASPECT_RATIO: aspect,
    }


def cross_eval(instance: Instance, optima: Mapping[ObjectiveKind, Partition]) -> list[RatioCell]:
    """Score each optimum under each objective, relative to that objective's optimum.

    Returns nine cells, ``solved_as``-major in ``COMPARED_OBJECTIVES`` order.
    Diagonal cells are exactly 1. Optimality of the inputs is the caller's
    responsibility; a ratio below 1 means some input was not optimal.

    Raises:
        KeyError: If *optima* lacks one of the compared objectives.

    Example::

        cells = cross_eval(inst, exact_optima(inst))
        assert all(c.ratio == 1 for c in cells if c.solved_as is c.evaluated_as)
    """
    layouts = {kind: realize(instance, optima[kind]) for kind in COMPARED_OBJECTIVES}
    values = {
        (x, y): objective_key(layouts[x], y)
        for x in COMPARED_OBJECTIVES
        for y in COMPARED_OBJECTIVES
    }
    return [
        RatioCell(x, y, values[x, y] / values[y, y])
        for x in COMPARED_OBJECTIVES
        for y in COMPARED_OBJECTIVES
    ]


def ratio_summary(
    tables: Iterable[Sequence[RatioCell]],
) -> dict[tuple[ObjectiveKind, ObjectiveKind], float]:
    """Mean ratio per ``(solved_as, evaluated_as)`` over many instances.

    Raises:
        ValueError: If *tables* is empty.
    """
    sums: dict[tuple[ObjectiveKind, ObjectiveKind], Fraction] = {}
    counts: dict[tuple[ObjectiveKind, ObjectiveKind], int] = {}
    for table in tables:
        for cell in table:
            key = (cell.solved_as, cell.evaluated_as)
            sums[key] = sums.get(key, Fraction(0)) + cell.ratio
            counts[key] = counts.get(key, 0) + 1
    if not sums:
        raise ValueError("ratio_summary needs at least one table")
    return {key: float(total / counts[key]) for key, total in sums.items()}
