"""Perimeter-sum solver via concave least-weight subsequence."""

from guillotine_layout.clws._perisum import solve_peri_sum
from guillotine_layout.clws._prefix import (
    ConcavityReport,
    PrefixAreas,
    check_concavity,
    concavity_margin,
    weight,
)
from guillotine_layout.clws._solver import (
    CLWS_CALL_FACTOR,
    Breakpoints,
    CountingOracle,
    breakpoints_to_layers,
    solve_clws_fast,
    solve_clws_prefix_weight,
    solve_clws_quadratic,
)

__all__ = [
    "CLWS_CALL_FACTOR",
    "Breakpoints",
    "ConcavityReport",
    "CountingOracle",
    "PrefixAreas",
    "breakpoints_to_layers",
    "check_concavity",
    "concavity_margin",
    "solve_clws_fast",
    "solve_clws_prefix_weight",
    "solve_clws_quadratic",
    "solve_peri_sum",
    "weight",
]
