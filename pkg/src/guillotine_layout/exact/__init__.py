"""Exact solvers: brute-force oracle, branch-and-bound and binary search."""

from guillotine_layout.exact._binary_search import solve_aspect_binary_search
from guillotine_layout.exact._branch import (
    assignment_order,
    lower_bound_aspect,
    lower_bound_peri_max,
    solve_aspect_exact_bb,
    solve_peri_max_bb,
)
from guillotine_layout.exact._brute import brute_force, iter_set_partitions
from guillotine_layout.exact._feasibility import feasibility_decision
from guillotine_layout.exact._intervals import height_interval_aspect, height_interval_perimeter
from guillotine_layout.exact._models import (
    INFEASIBLE,
    BinarySearchTrace,
    HeightInterval,
    Infeasible,
    SearchStats,
)
from guillotine_layout.exact._scoring import layer_key, partition_key

__all__ = [
    "INFEASIBLE",
    "BinarySearchTrace",
    "HeightInterval",
    "Infeasible",
    "SearchStats",
    "assignment_order",
    "brute_force",
    "feasibility_decision",
    "height_interval_aspect",
    "height_interval_perimeter",
    "iter_set_partitions",
    "layer_key",
    "lower_bound_aspect",
    "lower_bound_peri_max",
    "partition_key",
    "solve_aspect_binary_search",
    "solve_aspect_exact_bb",
    "solve_peri_max_bb",
]
