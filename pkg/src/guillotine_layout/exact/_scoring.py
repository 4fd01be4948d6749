"""Exact per-layer objective keys, shared by every exact solver."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from guillotine_layout.core import Instance, ObjectiveKind

__all__ = ["layer_key", "partition_key"]


def layer_key(kind: ObjectiveKind, L1: Fraction, layer_areas: Sequence[Fraction]) -> Fraction:
    """Objective key of one full-width layer holding *layer_areas*.

    Perimeter sum is additive over layers; the three other objectives are
    the maximum over layers. Agrees with ``core.objective_key``.
    """
    height = sum(layer_areas, Fraction(0)) / L1
    if kind is ObjectiveKind.PERI_SUM:
        return 2 * (len(layer_areas) * height + L1)
    if kind is ObjectiveKind.PERI_MAX:
        return 2 * (height + max(layer_areas) / height)
    squared = height * height
    if kind is ObjectiveKind.ASPECT_RATIO:
        return max(max(layer_areas) / squared, squared / min(layer_areas))
    return max((squared - a) ** 2 / (a * squared) for a in layer_areas)


def partition_key(
    instance: Instance, layers: Iterable[Iterable[int]], kind: ObjectiveKind
) -> Fraction:
    """Exact objective key of a partition given as 0-based index groups."""
    keys = [layer_key(kind, instance.L1, [instance.areas[i] for i in layer]) for layer in layers]
    if kind is ObjectiveKind.PERI_SUM:
        return sum(keys, Fraction(0))
    return max(keys)
