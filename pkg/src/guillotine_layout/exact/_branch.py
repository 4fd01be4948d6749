"""Branch-and-bound over canonical layer assignments for max-type objectives."""

from __future__ import annotations

import math
from collections.abc import Callable
from fractions import Fraction

from guillotine_layout._logging import log_incumbent, log_search_summary
from guillotine_layout.clws import solve_peri_sum
from guillotine_layout.config import SolverConfig, resolve_config
from guillotine_layout.core import Instance, ObjectiveKind, Partition, canonicalize
from guillotine_layout.exact._deadline import Deadline, SearchTimeout
from guillotine_layout.exact._models import SearchStats
from guillotine_layout.exact._scoring import partition_key

__all__ = [
    "assignment_order",
    "lower_bound_aspect",
    "lower_bound_peri_max",
    "solve_aspect_exact_bb",
    "solve_peri_max_bb",
]

# (layer sum, remaining area, largest member, smallest member, L1) -> bound
_LayerBound = Callable[[float, float, float, float, float], float]


def assignment_order(instance: Instance) -> list[int]:
    """Rectangle indices by non-increasing area, ties by index."""
    return sorted(range(instance.n), key=lambda i: (-instance.areas[i], i))


def _clamp(x: float, lo: float, hi: float) -> float:
    return lo if x < lo else hi if x > hi else x


def _perimeter_bound(s: float, rest: float, a_max: float, a_min: float, L1: float) -> float:
    # 2 * (h + a_max / h) over the heights the layer can still reach
    h = _clamp(math.sqrt(a_max), s / L1, (s + rest) / L1)
    return 2 * (h + a_max / h)


def _aspect_bound(s: float, rest: float, a_max: float, a_min: float, L1: float) -> float:
    # max(a_max / h**2, h**2 / a_min), balanced at h**2 = sqrt(a_max * a_min)
    lo = s / L1
    hi = (s + rest) / L1
    x = _clamp(math.sqrt(a_max * a_min), lo * lo, hi * hi)
    return max(a_max / x, x / a_min)


def _single_bounds(instance: Instance, layer_bound: _LayerBound) -> list[float]:
    # Bound for each rectangle alone: its layer height lies in [a / L1, L2].
    L1 = float(instance.L1)
    L2 = float(instance.L2)
    bounds: list[float] = []
    for area in instance.areas:
        a = float(area)
        bounds.append(layer_bound(a, L2 * L1 - a, a, a, L1))
    return bounds


def lower_bound_peri_max(instance: Instance) -> float:
    """Root lower bound on the maximum perimeter.

    The largest rectangle sits in a layer of height ``h`` between
    ``a_max / L1`` and ``L2``; its perimeter is at least ``2 * (h + a_max / h)``
    at the best such ``h``.

    Example::

        inst = Instance.create(L1=2, L2=2, areas=[1, 1, 2])
        assert lower_bound_peri_max(inst) == pytest.approx(4 * math.sqrt(2))
    """
    return max(_single_bounds(instance, _perimeter_bound))


def lower_bound_aspect(instance: Instance) -> float:
    """Root lower bound on the maximum aspect ratio (at least 1)."""
    return max(1.0, *_single_bounds(instance, _aspect_bound))


class _MaxObjectiveSearch:
    """Depth-first search minimizing a max-over-layers objective.

    Rectangles are assigned in ``assignment_order``; rectangle ``t`` joins
    one of the open layers or opens the next one, so each partition is
    visited once up to the order of its layers. A rectangle equal in area to
    its predecessor never joins an earlier layer than the predecessor did.
    """

    def __init__(
        self,
        instance: Instance,
        kind: ObjectiveKind,
        layer_bound: _LayerBound,
        root_bound: float,
        incumbent: Partition,
        deadline: Deadline,
        config: SolverConfig,
        solver: str,
    ) -> None:
        self.instance = instance
        self.kind = kind
        self.layer_bound = layer_bound
        self.root_bound = root_bound
        self.deadline = deadline
        self.config = config
        self.solver = solver

        self.order = assignment_order(instance)
        self.areas = [float(instance.areas[i]) for i in self.order]
        self.L1 = float(instance.L1)
        n = instance.n
        self.rest = [0.0] * (n + 1)
        for t in range(n - 1, -1, -1):
            self.rest[t] = self.rest[t + 1] + self.areas[t]
        singles = _single_bounds(instance, layer_bound)
        self.tail_bound = [0.0] * (n + 1)
        for t in range(n - 1, -1, -1):
            self.tail_bound[t] = max(self.tail_bound[t + 1], singles[self.order[t]])

        self.best = incumbent
        self.best_key = partition_key(instance, incumbent.layers, kind)
        self._set_threshold()

        self.layers: list[list[int]] = []
        self.sums: list[float] = []
        self.placed_in = [0] * n

    def _set_threshold(self) -> None:
        ub = float(self.best_key)
        self.threshold = ub - self.config.bound_tolerance * max(1.0, abs(ub))

    @property
    def proven(self) -> bool:
        """True once the incumbent meets the root bound."""
        return self.root_bound >= self.threshold

    def _bound(self, t: int) -> float:
        rest = self.rest[t]
        lb = self.tail_bound[t]
        for layer, s in zip(self.layers, self.sums):
            # members arrive by non-increasing area
            b = self.layer_bound(s, rest, self.areas[layer[0]], self.areas[layer[-1]], self.L1)
            if b > lb:
                lb = b
        return lb

    def _leaf(self) -> None:
        groups = [[self.order[t] for t in layer] for layer in self.layers]
        key = partition_key(self.instance, groups, self.kind)
        if key < self.best_key:
            self.best_key = key
            self.best = Partition.of(groups)
            self._set_threshold()
            if self.config.log_search_progress:
                log_incumbent(solver=self.solver, value=key, nodes=self.deadline.nodes)

    def run(self) -> None:
        if not self.proven:
            self._descend(0)

    def _descend(self, t: int) -> None:
        if t == len(self.order):
            self._leaf()
            return
        first = 0
        if t > 0 and self.areas[t] == self.areas[t - 1]:
            first = self.placed_in[t - 1]
        area = self.areas[t]
        for k in range(first, len(self.layers) + 1):
            if k == len(self.layers):
                self.layers.append([])
                self.sums.append(0.0)
            self.layers[k].append(t)
            self.sums[k] += area
            self.placed_in[t] = k
            self.deadline.tick()
            if self._bound(t + 1) < self.threshold:
                self._descend(t + 1)
            self.layers[k].pop()
            self.sums[k] -= area
            if not self.layers[k]:
                self.layers.pop()
                self.sums.pop()
            if self.proven:
                return


def _solve_max_objective(
    instance: Instance,
    kind: ObjectiveKind,
    layer_bound: _LayerBound,
    root_bound: float,
    solver: str,
    time_limit: float | None,
    initial: Partition | None,
    config: SolverConfig | None,
) -> tuple[Partition, SearchStats]:
    cfg = resolve_config(config)
    limit = time_limit if time_limit is not None else cfg.time_limit
    deadline = Deadline(limit, cfg.poll_interval)
    if initial is None:
        initial, _ = solve_peri_sum(instance)
    else:
        initial.validate(instance.n)
    search = _MaxObjectiveSearch(
        instance, kind, layer_bound, root_bound, initial, deadline, cfg, solver
    )
    try:
        search.run()
        timed_out = False
    except SearchTimeout:
        timed_out = True
    ub = search.best_key
    if timed_out:
        stats = SearchStats(
            nodes=deadline.nodes,
            elapsed=deadline.elapsed,
            bound_lb=min(root_bound, float(ub)),
            bound_ub=ub,
            status="TimeLimit",
        )
    else:
        stats = SearchStats(
            nodes=deadline.nodes,
            elapsed=deadline.elapsed,
            bound_lb=ub,
            bound_ub=ub,
            status="Optimal",
        )
    log_search_summary(solver=solver, n=instance.n, stats=stats)
    return canonicalize(search.best), stats


def solve_peri_max_bb(
    instance: Instance,
    time_limit: float | None = None,
    initial: Partition | None = None,
    *,
    config: SolverConfig | None = None,
) -> tuple[Partition, SearchStats]:
    """Minimize the maximum rectangle perimeter exactly.

    The incumbent starts at *initial* (default: the perimeter-sum optimum).
    A node is pruned when its bound reaches the incumbent value; the bound
    is the largest of

    - the best perimeter any unassigned rectangle can get on its own,
    - per open layer, ``2 * (h + a_max / h)`` minimized over the heights
      the layer can still reach with the unassigned area.

    The search stops early once the incumbent meets the root bound
    (``lower_bound_peri_max``). On a time limit the incumbent is returned
    with status ``"TimeLimit"`` and ``bound_lb = min(root bound, ub)``.

    Example::

        partition, stats = solve_peri_max_bb(inst, time_limit=60)
        assert stats.status == "Optimal"
        print(stats.bound_ub)  # exact maximum perimeter
    """
    return _solve_max_objective(
        instance,
        ObjectiveKind.PERI_MAX,
        _perimeter_bound,
        lower_bound_peri_max(instance),
        "peri-max-bb",
        time_limit,
        initial,
        config,
    )


def solve_aspect_exact_bb(
    instance: Instance,
    time_limit: float | None = None,
    initial: Partition | None = None,
    *,
    config: SolverConfig | None = None,
) -> tuple[Partition, SearchStats]:
    """Minimize the maximum aspect ratio exactly.

    Same search as ``solve_peri_max_bb``; an open layer with largest member
    ``a_max`` and smallest member ``a_min`` contributes
    ``max(a_max / h**2, h**2 / a_min)`` at its best reachable height.
    """
    return _solve_max_objective(
        instance,
        ObjectiveKind.ASPECT_RATIO,
        _aspect_bound,
        lower_bound_aspect(instance),
        "aspect-bb",
        time_limit,
        initial,
        config,
    )

