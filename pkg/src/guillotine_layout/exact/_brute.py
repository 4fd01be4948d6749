"""Exhaustive set-partition enumeration, the oracle for every other solver."""

from __future__ import annotations

import math
from collections.abc import Iterator
from fractions import Fraction

from guillotine_layout.config import SolverConfig, resolve_config
from guillotine_layout.core import Instance, ObjectiveKind, Partition, canonicalize
from guillotine_layout.exact._scoring import partition_key
from guillotine_layout.exceptions import ProblemSizeError

__all__ = ["brute_force", "iter_set_partitions"]


def iter_set_partitions(n: int) -> Iterator[Partition]:
    """Yield every set partition of ``{0..n-1}`` exactly once.

    Walks restricted growth strings ``g`` (``g[0] = 0``,
    ``g[i] <= 1 + max(g[:i])``) in lexicographic order; rectangle ``i`` goes
    to layer ``g[i]``.

    Example::

        assert sum(1 for _ in iter_set_partitions(4)) == 15
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    growth = [0] * n
    # ceiling[i] = 1 + max(growth[:i])
    ceiling = [1] * n
    while True:
        layers: list[list[int]] = [[] for _ in range(max(growth) + 1)]
        for i, k in enumerate(growth):
            layers[k].append(i)
        yield Partition.of(layers)

        i = n - 1
        while i > 0 and growth[i] == ceiling[i]:
            i -= 1
        if i == 0:
            return
        growth[i] += 1
        for j in range(i + 1, n):
            growth[j] = 0
            ceiling[j] = max(ceiling[j - 1], growth[j - 1] + 1)


def brute_force(
    instance: Instance, kind: ObjectiveKind, *, config: SolverConfig | None = None
) -> tuple[Partition, Fraction | float]:
    """Minimize *kind* over all set partitions of the rectangles.

    Ties are broken by the smallest canonical form (``Partition.sort_key``).
    Perimeter sum, maximum perimeter and aspect ratio are returned as exact
    ``Fraction`` values; the surrogate is compared exactly in squared form
    and returned as a float.

    Raises:
        ProblemSizeError: If ``n`` exceeds ``config.brute_force_max_n``.

    Example::

        inst = Instance.create(L1=2, L2=2, areas=[1, 1, 2])
        partition, value = brute_force(inst, ObjectiveKind.ASPECT_RATIO)
        assert value == 2
    """
    cfg = resolve_config(config)
    if instance.n > cfg.brute_force_max_n:
        raise ProblemSizeError(
            what="brute_force", size=instance.n, limit=cfg.brute_force_max_n
        )
    best: Partition | None = None
    best_key: Fraction | None = None
    best_order: tuple[tuple[int, ...], ...] = ()
    for partition in iter_set_partitions(instance.n):
        key = partition_key(instance, partition.layers, kind)
        if best_key is not None and key > best_key:
            continue
        order = partition.sort_key()
        if best_key is None or key < best_key or order < best_order:
            best, best_key, best_order = partition, key, order
    assert best is not None and best_key is not None
    if kind is ObjectiveKind.ASPECT_SURROGATE:
        return canonicalize(best), math.sqrt(best_key)
    return canonicalize(best), best_key
