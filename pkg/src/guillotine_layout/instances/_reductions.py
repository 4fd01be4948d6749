"""Instances built from 2-Partition, and the subset-sum oracle that decides them."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from guillotine_layout.config import SolverConfig, resolve_config
from guillotine_layout.core import Instance
from guillotine_layout.exceptions import ProblemSizeError

__all__ = [
    "TwoPartitionInstance",
    "reduce_2partition_to_aspect",
    "reduce_2partition_to_perimax",
    "solve_2partition_dp",
]


@dataclass(frozen=True, slots=True)
class TwoPartitionInstance:
    """Positive integers ``c_1..c_n`` to be split into two equal-sum halves.

    Example::

        tp = TwoPartitionInstance.of([3, 1, 1, 2, 2, 1])
        assert tp.total == 10 and tp.c_max == 3
    """

    c: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.c:
            raise ValueError("2-Partition instance needs at least one integer")
        for value in self.c:
            if isinstance(value, bool) or value < 1:
                raise ValueError(f"2-Partition integers must be >= 1, got {value!r}")

    @classmethod
    def of(cls, values: Iterable[int]) -> TwoPartitionInstance:
        return cls(tuple(values))

    @property
    def total(self) -> int:
        return sum(self.c)

    @property
    def c_max(self) -> int:
        return max(self.c)

    @property
    def c_min(self) -> int:
        return min(self.c)


def reduce_2partition_to_perimax(tp: TwoPartitionInstance) -> tuple[Instance, Fraction]:
    """Instance whose maximum perimeter is ``<= 4 c_max`` iff *tp* splits evenly.

    ``L1 = C / 2``, ``L2 = 2 c_max``, areas ``c_i * c_max``, threshold
    ``4 c_max``. An odd total is allowed and yields a no-instance.

    Example::

        inst, threshold = reduce_2partition_to_perimax(TwoPartitionInstance.of([1, 1, 2]))
        assert (inst.L1, inst.L2, threshold) == (2, 4, 8)
    """
    c_max = tp.c_max
    instance = Instance(
        L1=Fraction(tp.total, 2),
        L2=Fraction(2 * c_max),
        areas=tuple(Fraction(c * c_max) for c in tp.c),
        name=f"perimax-reduction-n{len(tp.c)}",
        meta=(("reduction", "peri-max"),),
    )
    return instance, Fraction(4 * c_max)


def reduce_2partition_to_aspect(tp: TwoPartitionInstance) -> tuple[Instance, Fraction]:
    """Instance whose aspect ratio can reach ``M`` iff *tp* splits evenly.

    ``M = 2 (C + 1)**2 / c_min``; ``L1 = M + 1/M + C/2``, ``L2 = 2``; the
    areas are the ``c_i`` followed by ``M, M, 1/M, 1/M``; threshold ``M``.
    """
    total = tp.total
    m = Fraction(2 * (total + 1) ** 2, tp.c_min)
    areas = tuple(Fraction(c) for c in tp.c) + (m, m, 1 / m, 1 / m)
    instance = Instance(
        L1=m + 1 / m + Fraction(total, 2),
        L2=Fraction(2),
        areas=areas,
        name=f"aspect-reduction-n{len(tp.c)}",
        meta=(("reduction", "aspect"),),
    )
    return instance, m


def solve_2partition_dp(tp: TwoPartitionInstance, *, config: SolverConfig | None = None) -> bool:
    """True iff some subset of *tp* sums to half the total.

    Subset sums are tracked as the bits of one Python integer.

    Raises:
        ProblemSizeError: If the total exceeds ``config.dp_max_sum``.

    Example::

        assert solve_2partition_dp(TwoPartitionInstance.of([3, 1, 1, 2, 2, 1]))
    """
    cfg = resolve_config(config)
    total = tp.total
    if total > cfg.dp_max_sum:
        raise ProblemSizeError(what="2-Partition total", size=total, limit=cfg.dp_max_sum)
    if total % 2:
        return False
    half = total // 2
    mask = (1 << (half + 1)) - 1
    reachable = 1
    for value in tp.c:
        reachable = (reachable | (reachable << value)) & mask
    return bool(reachable >> half & 1)
