"""Bisection on the aspect-ratio threshold with interval feasibility checks."""

from __future__ import annotations

from fractions import Fraction

from guillotine_layout._logging import log_binary_search_step, log_search_summary
from guillotine_layout.clws import solve_peri_sum
from guillotine_layout.config import SolverConfig, resolve_config
from guillotine_layout.core import Instance, ObjectiveKind, Partition
from guillotine_layout.exact._deadline import Deadline, SearchTimeout
from guillotine_layout.exact._feasibility import decide_layers
from guillotine_layout.exact._intervals import height_interval_aspect
from guillotine_layout.exact._models import INFEASIBLE, BinarySearchTrace, SearchStats
from guillotine_layout.exact._scoring import partition_key

__all__ = ["solve_aspect_binary_search"]


def solve_aspect_binary_search(
    instance: Instance,
    time_limit: float | None = None,
    *,
    config: SolverConfig | None = None,
) -> tuple[Partition, Fraction, BinarySearchTrace, SearchStats]:
    """Approximate the minimum aspect ratio to within ``binary_search_gap``.

    Starts from ``low = 1`` (never tested) and ``up`` = aspect ratio of the
    perimeter-sum optimum, which is also the first incumbent. Each step
    tests ``mid = (low + up) / 2`` with ``feasibility_decision`` on the
    aspect intervals: a witness lowers ``up`` and becomes the incumbent,
    otherwise ``low`` rises. Stops when ``up - low < gap`` or at the time
    limit.

    Returns:
        ``(incumbent, exact aspect ratio of the incumbent, trace, stats)``.
        ``stats.bound_lb`` is the final ``low``.

    Example::

        partition, value, trace, stats = solve_aspect_binary_search(inst)
        assert len(trace.iterations) == 7  # on the (2, 2, [1, 1, 2]) instance
    """
    cfg = resolve_config(config)
    limit = time_limit if time_limit is not None else cfg.time_limit
    deadline = Deadline(limit, cfg.poll_interval)

    start, _ = solve_peri_sum(instance)
    start_value = partition_key(instance, start.layers, ObjectiveKind.ASPECT_RATIO)
    trace = BinarySearchTrace(phi_low=1.0, phi_up=float(start_value), incumbent=start)

    timed_out = False
    try:
        while trace.phi_up - trace.phi_low >= cfg.binary_search_gap:
            if deadline.expired():
                raise SearchTimeout
            mid = (trace.phi_low + trace.phi_up) / 2
            intervals = [
                height_interval_aspect(a, mid).for_rect(i) for i, a in enumerate(instance.areas)
            ]
            witness = decide_layers(instance, intervals, cfg.feasibility_tolerance, deadline)
            feasible = witness is not INFEASIBLE
            trace.record(mid, feasible, witness if isinstance(witness, Partition) else None)
            log_binary_search_step(
                phi_mid=mid, feasible=feasible, low=trace.phi_low, up=trace.phi_up
            )
    except SearchTimeout:
        timed_out = True

    value = partition_key(instance, trace.incumbent.layers, ObjectiveKind.ASPECT_RATIO)
    stats = SearchStats(
        nodes=deadline.nodes,
        elapsed=deadline.elapsed,
        bound_lb=min(trace.phi_low, float(value)),
        bound_ub=value,
        status="TimeLimit" if timed_out else "Optimal",
    )
    log_search_summary(solver="aspect-binsearch", n=instance.n, stats=stats)
    return trace.incumbent, value, trace, stats
