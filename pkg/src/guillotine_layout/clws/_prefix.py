"""Sorted prefix sums, the single-layer weight and its concavity check."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Any

import numpy as np

__all__ = [
    "ConcavityReport",
    "PrefixAreas",
    "check_concavity",
    "concavity_margin",
    "weight",
]


@dataclass(frozen=True, slots=True)
class PrefixAreas:
    """Areas sorted non-decreasingly, with exact prefix sums.

    Prefix sums are stored as integers over a common ``scale`` so that
    large instances stay cheap; ``prefix`` rebuilds the fractions.

    Attributes:
        sorted_areas: The areas in non-decreasing order (stable).
        perm: ``perm[p]`` is the original index of sorted position ``p``.
        scale: Common denominator of all areas.
        scaled_prefix: ``scale * P[j]`` for ``j = 0..n``.

    Example::

        prefix = PrefixAreas.from_areas([Fraction(2), Fraction(1), Fraction(1)])
        assert prefix.perm == (1, 2, 0)
        assert prefix.prefix == (0, 1, 2, 4)
    """

    sorted_areas: tuple[Fraction, ...]
    perm: tuple[int, ...]
    scale: int
    scaled_prefix: tuple[int, ...]

    @classmethod
    def from_areas(cls, areas: Sequence[Fraction]) -> PrefixAreas:
        scale = math.lcm(1, *(a.denominator for a in areas))
        if scale == 1:
            scaled = [a.numerator for a in areas]
        else:
            scaled = [a.numerator * (scale // a.denominator) for a in areas]
        perm = sorted(range(len(areas)), key=scaled.__getitem__)
        prefix = [0, *accumulate(scaled[p] for p in perm)]
        return cls(
            sorted_areas=tuple(areas[p] for p in perm),
            perm=tuple(perm),
            scale=scale,
            scaled_prefix=tuple(prefix),
        )

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def prefix(self) -> tuple[Fraction, ...]:
        """Exact prefix sums ``P[0..n]`` with ``P[0] = 0``."""
        return tuple(Fraction(q, self.scale) for q in self.scaled_prefix)

    def segment_area(self, i: int, j: int) -> Fraction:
        """Total area of sorted positions ``i+1..j`` (``P[j] - P[i]``)."""
        return Fraction(self.scaled_prefix[j] - self.scaled_prefix[i], self.scale)


def weight(prefix: PrefixAreas, L1: Fraction, i: int, j: int) -> Fraction:
    """Perimeter sum of sorted rectangles ``i+1..j`` placed in one layer.

    ``2 * (L1 + (j - i) / L1 * (P[j] - P[i]))``.

    Raises:
        ValueError: Unless ``0 <= i < j <= n``.

    Example::

        prefix = PrefixAreas.from_areas([Fraction(1), Fraction(1), Fraction(2)])
        assert weight(prefix, Fraction(2), 0, 2) == 8
    """
    if not 0 <= i < j <= prefix.n:
        raise ValueError(f"weight needs 0 <= i < j <= {prefix.n}, got i={i}, j={j}")
    return 2 * (L1 + (j - i) * prefix.segment_area(i, j) / L1)


def concavity_margin(
    prefix: PrefixAreas, L1: Fraction, i0: int, i1: int, j0: int, j1: int
) -> Fraction:
    """``w(i0,j1) + w(i1,j0) - w(i0,j0) - w(i1,j1)``; positive on concave weights."""
    return (
        weight(prefix, L1, i0, j1)
        + weight(prefix, L1, i1, j0)
        - weight(prefix, L1, i0, j0)
        - weight(prefix, L1, i1, j1)
    )


@dataclass(frozen=True, slots=True)
class ConcavityReport:
    """Outcome of a randomized concavity check.

    Attributes:
        passed: True if every sampled quadruple had a strictly positive margin.
        samples: Number of quadruples checked.
        counterexample: First failing ``(i0, i1, j0, j1)``, if any.
        margin: Margin of the counterexample.
    """

    passed: bool
    samples: int
    counterexample: tuple[int, int, int, int] | None = None
    margin: Fraction | None = None

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary."""
        return {
            "passed": self.passed,
            "samples": self.samples,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "margin": str(self.margin) if self.margin is not None else None,
        }


def check_concavity(
    prefix: PrefixAreas, L1: Fraction, samples: int, seed: int = 0
) -> ConcavityReport:
    """Sample quadruples ``i0 < i1 < j0 < j1`` and verify the strict inequality.

    Raises:
        ValueError: If ``samples > 0`` and fewer than four breakpoint
            positions exist (``n < 3``).
    """
    if samples <= 0:
        return ConcavityReport(passed=True, samples=0)
    if prefix.n < 3:
        raise ValueError(f"concavity needs at least 4 positions (n >= 3), got n={prefix.n}")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        quad = sorted(int(x) for x in rng.choice(prefix.n + 1, size=4, replace=False))
        i0, i1, j0, j1 = quad
        margin = concavity_margin(prefix, L1, i0, i1, j0, j1)
        if margin <= 0:
            return ConcavityReport(
                passed=False, samples=samples, counterexample=(i0, i1, j0, j1), margin=margin
            )
    return ConcavityReport(passed=True, samples=samples)
