"""Partition: ordered layers of rectangle indices."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from guillotine_layout.exceptions import PartitionValidationError

__all__ = ["Partition", "canonicalize"]


@dataclass(frozen=True, slots=True)
class Partition:
    """An ordered list of layers; each layer is a tuple of 0-based indices.

    Layer ``0`` is the bottom strip of the layout. Use ``from_one_based``
    and ``to_one_based`` at every I/O boundary.

    Example::

        p = Partition.from_one_based([[1, 2], [3]])
        assert p.layers == ((0, 1), (2,))
    """

    layers: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, layers: Iterable[Iterable[int]]) -> Partition:
        """Build from 0-based index groups."""
        return cls(tuple(tuple(layer) for layer in layers))

    @classmethod
    def from_one_based(cls, layers: Iterable[Iterable[int]]) -> Partition:
        """Build from 1-based index groups, the external exchange form."""
        return cls(tuple(tuple(i - 1 for i in layer) for layer in layers))

    def to_one_based(self) -> list[list[int]]:
        return [[i + 1 for i in layer] for layer in self.layers]

    @property
    def m(self) -> int:
        """Number of layers."""
        return len(self.layers)

    def layer_of(self) -> dict[int, int]:
        """Map each rectangle index to its layer position."""
        return {i: k for k, layer in enumerate(self.layers) for i in layer}

    def validate(self, n: int) -> None:
        """Check that the layers form a set partition of ``{0..n-1}``.

        Raises:
            PartitionValidationError: Naming the first offending index.
        """
        seen: set[int] = set()
        for layer in self.layers:
            if not layer:
                raise PartitionValidationError(index=None, reason="empty-layer")
            for i in layer:
                if not 0 <= i < n:
                    raise PartitionValidationError(
                        index=i,
                        reason="out-of-range",
                        message=f"Invalid partition: index {i + 1} is outside 1..{n}",
                    )
                if i in seen:
                    raise PartitionValidationError(index=i, reason="duplicate")
                seen.add(i)
        if len(seen) != n:
            missing = min(set(range(n)) - seen)
            raise PartitionValidationError(index=missing, reason="missing")

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        """Total order used to break ties between equally good partitions."""
        return canonicalize(self).layers

    def __str__(self) -> str:
        groups = ("{" + ",".join(str(i) for i in layer) + "}" for layer in self.to_one_based())
        inner = ",".join(groups)
        return "{" + inner + "}"


def canonicalize(partition: Partition | Sequence[Sequence[int]]) -> Partition:
    """Sort layers by non-increasing size, ties by smallest member.

    Indices inside a layer are sorted ascending. The operation is
    idempotent.

    Example::

        p = canonicalize(Partition.from_one_based([[3], [1, 2]]))
        assert p.to_one_based() == [[1, 2], [3]]
    """
    layers = partition.layers if isinstance(partition, Partition) else partition
    sorted_layers = [tuple(sorted(layer)) for layer in layers]
    sorted_layers.sort(key=lambda layer: (-len(layer), layer[0] if layer else -1))
    return Partition(tuple(sorted_layers))
