"""Exact perimeter-sum minimization through concave least-weight subsequence."""

from __future__ import annotations

import math
from fractions import Fraction

from guillotine_layout.clws._prefix import PrefixAreas
from guillotine_layout.clws._solver import breakpoints_to_layers, solve_clws_prefix_weight
from guillotine_layout.core import Instance, Partition, canonicalize

__all__ = ["solve_peri_sum"]


def solve_peri_sum(instance: Instance) -> tuple[Partition, Fraction]:
    """Return a partition minimizing the perimeter sum, and that sum.

    Areas are sorted non-decreasingly (stable); an optimal partition then
    consists of consecutive runs of the sorted order, found by the
    ``O(n log n)`` CLWS owner stack on the single-layer weight.

    The weight is evaluated on integers: with ``D`` a common denominator
    of the areas and of ``L1**2``,

        ``w(i, j) = 2 / (L1 * D) * (D * L1**2 + (j - i) * D * (P[j] - P[i]))``

    so the search compares plain ints, with the weight inlined by
    ``solve_clws_prefix_weight``, and only the final value is a ``Fraction``.

    Example::

        inst = Instance.create(L1=2, L2=2, areas=[1, 1, 2])
        partition, value = solve_peri_sum(inst)
        assert partition.to_one_based() == [[1, 2], [3]] and value == 14
    """
    prefix = PrefixAreas.from_areas(instance.areas)
    L1 = instance.L1
    l1_squared = L1 * L1
    scale = math.lcm(prefix.scale, l1_squared.denominator)
    factor = scale // prefix.scale
    q = prefix.scaled_prefix if factor == 1 else [p * factor for p in prefix.scaled_prefix]
    base = l1_squared.numerator * (scale // l1_squared.denominator)

    breakpoints, total = solve_clws_prefix_weight(base, q)
    value = Fraction(2 * total) / (L1 * scale)
    layers = breakpoints_to_layers(breakpoints, prefix.perm)
    return canonicalize(layers), value
