"""Performance benchmarks for the solvers and the model export."""

from __future__ import annotations

import pytest

from guillotine_layout.clws import (
    PrefixAreas,
    solve_clws_fast,
    solve_clws_quadratic,
    solve_peri_sum,
    weight,
)
from guillotine_layout.core import ObjectiveKind, evaluate, realize
from guillotine_layout.exact import (
    brute_force,
    solve_aspect_binary_search,
    solve_aspect_exact_bb,
    solve_peri_max_bb,
)
from guillotine_layout.mip import build_peri_max_model, emit_lp

# ---------------------------------------------------------------------------
# Perimeter sum
# ---------------------------------------------------------------------------


@pytest.mark.benchmark
class TestClws:
    """Fast and quadratic CLWS on the same sorted prefix weights."""

    def test_fast(self, benchmark, large_instance):
        prefix = PrefixAreas.from_areas(sorted(large_instance.areas))
        _, value = benchmark(
            solve_clws_fast, large_instance.n, lambda i, j: weight(prefix, large_instance.L1, i, j)
        )
        assert value > 0

    def test_quadratic(self, benchmark, large_instance):
        prefix = PrefixAreas.from_areas(sorted(large_instance.areas))
        benchmark(
            solve_clws_quadratic,
            large_instance.n,
            lambda i, j: weight(prefix, large_instance.L1, i, j),
        )


# ---------------------------------------------------------------------------
# Max objectives
# ---------------------------------------------------------------------------


@pytest.mark.benchmark
class TestExact:
    def test_peri_max_bb(self, benchmark, medium_instance):
        _, stats = benchmark(solve_peri_max_bb, medium_instance)
        assert stats.status == "Optimal"

    def test_aspect_bb(self, benchmark, small_instance):
        _, stats = benchmark(solve_aspect_exact_bb, small_instance)
        assert stats.status == "Optimal"

    def test_aspect_binary_search(self, benchmark, small_instance):
        benchmark(solve_aspect_binary_search, small_instance)

    def test_brute_force(self, benchmark, small_instance):
        benchmark(brute_force, small_instance, ObjectiveKind.PERI_MAX)


# ---------------------------------------------------------------------------
# Geometry and export
# ---------------------------------------------------------------------------


@pytest.mark.benchmark
class TestGeometryAndExport:
    def test_realize_and_evaluate(self, benchmark, large_instance):
        partition, _ = solve_peri_sum(large_instance)

        def run():
            return evaluate(realize(large_instance, partition), ObjectiveKind.ASPECT_RATIO)

        benchmark(run)

    def test_emit_peri_max_lp(self, benchmark, medium_instance):
        model = build_peri_max_model(medium_instance, with_cuts=True)
        text = benchmark(emit_lp, model)
        assert text.endswith("End\n")
