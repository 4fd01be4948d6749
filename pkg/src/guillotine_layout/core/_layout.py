"""Layout: realized geometry of a partition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from guillotine_layout.core._instance import Instance, format_rational
from guillotine_layout.core._partition import Partition

__all__ = ["Layout", "RectGeometry", "realize"]


@dataclass(frozen=True, slots=True)
class RectGeometry:
    """Placement of one soft rectangle.

    Attributes:
        layer: Position of the containing layer in the partition.
        width: Length along ``L1``.
        height: Height along ``L2`` (equal to the layer height).
    """

    layer: int
    width: Fraction
    height: Fraction

    @property
    def area(self) -> Fraction:
        return self.width * self.height


@dataclass(frozen=True, slots=True)
class Layout:
    """Exact geometry of every layer and rectangle.

    Attributes:
        instance: The instance this layout realizes.
        partition: The partition, in the order layers are stacked.
        layer_heights: Height of each layer.
        rects: Geometry per rectangle, indexed like ``instance.areas``.
    """

    instance: Instance
    partition: Partition
    layer_heights: tuple[Fraction, ...]
    rects: tuple[RectGeometry, ...]

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary (1-based indices)."""
        return {
            "partition": self.partition.to_one_based(),
            "layer_heights": [format_rational(h) for h in self.layer_heights],
            "rects": [
                {
                    "index": i + 1,
                    "layer": r.layer + 1,
                    "width": format_rational(r.width),
                    "height": format_rational(r.height),
                }
                for i, r in enumerate(self.rects)
            ],
        }


def realize(instance: Instance, partition: Partition) -> Layout:
    """Compute exact layer heights and rectangle sides for *partition*.

    A layer's height is its total area divided by ``L1``; each member's
    width is its area divided by that height.

    Raises:
        PartitionValidationError: If *partition* is not a set partition of
            the instance's rectangles.

    Example::

        inst = Instance.create(L1=2, L2=2, areas=[1, 1, 2])
        layout = realize(inst, Partition.from_one_based([[1, 2], [3]]))
        assert layout.layer_heights == (1, 1)
    """
    partition.validate(instance.n)
    heights: list[Fraction] = []
    rects: list[RectGeometry | None] = [None] * instance.n
    for k, layer in enumerate(partition.layers):
        height = sum((instance.areas[i] for i in layer), Fraction(0)) / instance.L1
        heights.append(height)
        for i in layer:
            rects[i] = RectGeometry(layer=k, width=instance.areas[i] / height, height=height)
    return Layout(
        instance=instance,
        partition=partition,
        layer_heights=tuple(heights),
        rects=tuple(r for r in rects if r is not None),
    )
