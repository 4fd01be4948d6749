"""Decide whether every layer height can meet its members' height intervals."""

from __future__ import annotations

import math
from collections.abc import Sequence

from guillotine_layout.config import SolverConfig, resolve_config
from guillotine_layout.core import Instance, Partition, canonicalize
from guillotine_layout.exact._branch import assignment_order
from guillotine_layout.exact._deadline import Deadline
from guillotine_layout.exact._models import INFEASIBLE, HeightInterval, Infeasible

__all__ = ["decide_layers", "feasibility_decision"]


class _IntervalSearch:
    """Depth-first search over canonical assignments, pruning on intervals.

    Each open layer keeps the intersection ``[lo, hi]`` of its members'
    intervals and its area sum ``s``. A layer is abandoned when the
    intersection is empty, when ``s / L1`` already exceeds ``hi`` (heights
    only grow), or when all the unassigned area cannot lift it to ``lo``.
    """

    def __init__(
        self,
        instance: Instance,
        intervals: Sequence[HeightInterval],
        tolerance: float,
        deadline: Deadline,
    ) -> None:
        self.order = assignment_order(instance)
        self.areas = [float(instance.areas[i]) for i in self.order]
        self.lows = [intervals[i].lo for i in self.order]
        self.highs = [intervals[i].hi for i in self.order]
        self.L1 = float(instance.L1)
        self.tol = tolerance
        self.deadline = deadline
        n = instance.n
        self.rest = [0.0] * (n + 1)
        for t in range(n - 1, -1, -1):
            self.rest[t] = self.rest[t + 1] + self.areas[t]
        # interchangeable with the previous rectangle in the order
        self.twin = [
            t > 0
            and self.areas[t] == self.areas[t - 1]
            and self.lows[t] == self.lows[t - 1]
            and self.highs[t] == self.highs[t - 1]
            for t in range(n)
        ]
        self.layers: list[list[int]] = []
        self.sums: list[float] = []
        self.los: list[float] = []
        self.his: list[float] = []
        self.placed_in = [0] * n

    def _alone_possible(self) -> bool:
        # every rectangle must fit some height in [a / L1, L2]
        L2 = self.rest[0] / self.L1
        return all(
            self.lows[t] <= L2 + self.tol and a / self.L1 <= self.highs[t] + self.tol
            for t, a in enumerate(self.areas)
        )

    def _layers_alive(self, rest: float) -> bool:
        for s, lo, hi in zip(self.sums, self.los, self.his):
            if lo > hi + self.tol:
                return False
            if s / self.L1 > hi + self.tol:
                return False
            if (s + rest) / self.L1 < lo - self.tol:
                return False
        return True

    def _complete(self) -> bool:
        for s, lo, hi in zip(self.sums, self.los, self.his):
            h = s / self.L1
            if not lo - self.tol <= h <= hi + self.tol:
                return False
        return True

    def run(self) -> list[list[int]] | None:
        if not self._alone_possible():
            return None
        if self._descend(0):
            return [list(layer) for layer in self.layers]
        return None

    def _descend(self, t: int) -> bool:
        if t == len(self.order):
            return self._complete()
        first = self.placed_in[t - 1] if self.twin[t] else 0
        area = self.areas[t]
        for k in range(first, len(self.layers) + 1):
            opened = k == len(self.layers)
            if opened:
                self.layers.append([])
                self.sums.append(0.0)
                self.los.append(0.0)
                self.his.append(math.inf)
            saved = (self.los[k], self.his[k])
            self.layers[k].append(t)
            self.sums[k] += area
            self.los[k] = max(self.los[k], self.lows[t])
            self.his[k] = min(self.his[k], self.highs[t])
            self.placed_in[t] = k
            self.deadline.tick()
            if self._layers_alive(self.rest[t + 1]) and self._descend(t + 1):
                return True
            self.layers[k].pop()
            self.sums[k] -= area
            self.los[k], self.his[k] = saved
            if opened:
                self.layers.pop()
                self.sums.pop()
                self.los.pop()
                self.his.pop()
        return False

    def partition(self, layers: list[list[int]]) -> Partition:
        return canonicalize([[self.order[t] for t in layer] for layer in layers])


def decide_layers(
    instance: Instance,
    intervals: Sequence[HeightInterval],
    tolerance: float,
    deadline: Deadline,
) -> Partition | Infeasible:
    """Run the decision under an external deadline (may raise ``SearchTimeout``)."""
    if len(intervals) != instance.n:
        raise ValueError(f"expected {instance.n} intervals, got {len(intervals)}")
    search = _IntervalSearch(instance, intervals, tolerance, deadline)
    layers = search.run()
    if layers is None:
        return INFEASIBLE
    return search.partition(layers)


def feasibility_decision(
    instance: Instance,
    intervals: Sequence[HeightInterval],
    tolerance: float | None = None,
    *,
    config: SolverConfig | None = None,
) -> Partition | Infeasible:
    """Find a partition whose layer heights lie in all members' intervals.

    Layer ``k`` has height ``sum(a_i for i in S_k) / L1``; it must lie in
    the intersection of the intervals of its members, widened by the
    additive *tolerance* (default ``config.feasibility_tolerance``).

    Returns:
        A canonical witness partition, or ``INFEASIBLE``.

    Example::

        intervals = [height_interval_aspect(a, 2) for a in inst.areas]
        witness = feasibility_decision(inst, intervals)
        assert witness is not INFEASIBLE
    """
    cfg = resolve_config(config)
    tol = cfg.feasibility_tolerance if tolerance is None else tolerance
    return decide_layers(instance, intervals, tol, Deadline(None, cfg.poll_interval))
