"""Benchmark CSV, cross-objective ratios, result storage and SVG rendering."""

from guillotine_layout.report._bench import (
    CSV_HEADER,
    SOLVERS,
    BenchRow,
    bench_instance,
    parse_csv,
    rows_to_csv,
    run_bench,
)
from guillotine_layout.report._ratios import (
    COMPARED_OBJECTIVES,
    RatioCell,
    cross_eval,
    exact_optima,
    ratio_summary,
)
from guillotine_layout.report._store import BenchRecord, BenchStore
from guillotine_layout.report._svg import render_svg

__all__ = [
    "COMPARED_OBJECTIVES",
    "CSV_HEADER",
    "SOLVERS",
    "BenchRecord",
    "BenchRow",
    "BenchStore",
    "RatioCell",
    "bench_instance",
    "cross_eval",
    "exact_optima",
    "parse_csv",
    "ratio_summary",
    "render_svg",
    "rows_to_csv",
    "run_bench",
]
