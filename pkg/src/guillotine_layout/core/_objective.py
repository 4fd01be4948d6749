"""Objective functions and the pairwise swap identity."""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from guillotine_layout.core._instance import Instance
from guillotine_layout.core._layout import Layout, RectGeometry
from guillotine_layout.core._partition import Partition
from guillotine_layout.exceptions import PartitionValidationError, SameLayerSwapError

__all__ = [
    "ObjectiveKind",
    "aspect_ratio",
    "evaluate",
    "objective_key",
    "peri_sum_of_partition",
    "swap",
    "swap_delta",
]


class ObjectiveKind(str, Enum):
    """The four objectives a layout can be scored with."""

    PERI_SUM = "peri-sum"
    PERI_MAX = "peri-max"
    ASPECT_RATIO = "aspect"
    ASPECT_SURROGATE = "aspect-surrogate"


def aspect_ratio(rect: RectGeometry) -> Fraction:
    """Return ``max(w/h, h/w)`` of one rectangle, exactly."""
    ratio = rect.width / rect.height
    return ratio if ratio >= 1 else 1 / ratio


def _surrogate_squared(rect: RectGeometry) -> Fraction:
    diff = rect.height - rect.width
    return diff * diff / rect.area


def objective_key(layout: Layout, kind: ObjectiveKind) -> Fraction:
    """Exact rational that orders layouts like *kind* does.

    Equal to ``evaluate`` for the first three objectives; for the
    surrogate it is the square of the value, which preserves order.
    """
    if kind is ObjectiveKind.PERI_SUM:
        return 2 * sum((r.width + r.height for r in layout.rects), Fraction(0))
    if kind is ObjectiveKind.PERI_MAX:
        return 2 * max(r.width + r.height for r in layout.rects)
    if kind is ObjectiveKind.ASPECT_RATIO:
        return max(aspect_ratio(r) for r in layout.rects)
    return max(_surrogate_squared(r) for r in layout.rects)


def evaluate(layout: Layout, kind: ObjectiveKind) -> Fraction | float:
    """Score *layout* under *kind*.

    Perimeter sum, maximum perimeter and maximum aspect ratio are exact
    ``Fraction`` values. The surrogate ``max |h - w| / sqrt(a)`` needs a
    square root and is returned as a float; compare it through
    ``objective_key`` when exactness matters.

    Example::

        layout = realize(inst, Partition.from_one_based([[1, 2], [3]]))
        assert evaluate(layout, ObjectiveKind.PERI_SUM) == 14
    """
    key = objective_key(layout, kind)
    if kind is ObjectiveKind.ASPECT_SURROGATE:
        return math.sqrt(key)
    return key


def peri_sum_of_partition(instance: Instance, partition: Partition) -> Fraction:
    """Perimeter sum from layer sizes alone: ``2 * sum(|S| * w(S) + L1)``."""
    partition.validate(instance.n)
    total = Fraction(0)
    for layer in partition.layers:
        height = sum((instance.areas[i] for i in layer), Fraction(0)) / instance.L1
        total += len(layer) * height + instance.L1
    return 2 * total


def _layers_of(partition: Partition, i: int, j: int) -> tuple[int, int]:
    owner = partition.layer_of()
    for index in (i, j):
        if index not in owner:
            raise PartitionValidationError(
                index=index,
                reason="out-of-range",
                message=f"Invalid swap: index {index} is in no layer of {partition}",
            )
    k, l = owner[i], owner[j]
    if k == l:
        raise SameLayerSwapError(i=i, j=j)
    return k, l


def swap_delta(instance: Instance, partition: Partition, i: int, j: int) -> Fraction:
    """Change in perimeter sum if rectangles *i* and *j* trade layers.

    ``(2 / L1) * (|S_k| - |S_l|) * (a_j - a_i)`` where ``i`` is in ``S_k``
    and ``j`` in ``S_l``. Indices are 0-based.

    Raises:
        SameLayerSwapError: If *i* and *j* share a layer.
        PartitionValidationError: If *partition* is invalid or misses *i* or *j*.
    """
    partition.validate(instance.n)
    k, l = _layers_of(partition, i, j)
    size_k = len(partition.layers[k])
    size_l = len(partition.layers[l])
    return 2 / instance.L1 * (size_k - size_l) * (instance.areas[j] - instance.areas[i])


def swap(partition: Partition, i: int, j: int) -> Partition:
    """Return *partition* with rectangles *i* and *j* exchanged.

    Raises:
        SameLayerSwapError: If *i* and *j* share a layer.
        PartitionValidationError: If *i* or *j* is in no layer.
    """
    k, l = _layers_of(partition, i, j)
    layers = [list(layer) for layer in partition.layers]
    layers[k][layers[k].index(i)] = j
    layers[l][layers[l].index(j)] = i
    return Partition.of(layers)
