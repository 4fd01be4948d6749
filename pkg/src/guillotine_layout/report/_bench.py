"""Benchmark harness: one row per (instance, solver), written as CSV."""

from __future__ import annotations

import csv
import io
import logging
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

from guillotine_layout.clws import solve_peri_sum
from guillotine_layout.config import SolverConfig, resolve_config
from guillotine_layout.core import Instance, format_rational, parse_rational
from guillotine_layout.exact import (
    SearchStats,
    solve_aspect_binary_search,
    solve_aspect_exact_bb,
    solve_peri_max_bb,
)
from guillotine_layout.instances import instance_from_dict

__all__ = [
    "CSV_HEADER",
    "SOLVERS",
    "BenchRow",
    "bench_instance",
    "parse_csv",
    "rows_to_csv",
    "run_bench",
]

logger = logging.getLogger("guillotine_layout.report")

CSV_HEADER = ("name", "n", "solver", "nodes", "time_s", "lb", "ub", "iters", "status")

Bound = Fraction | float | None


@dataclass(frozen=True, slots=True)
class BenchRow:
    """One benchmark measurement.

    Attributes:
        name: Instance name.
        n: Number of rectangles.
        solver: Solver id (see ``SOLVERS``).
        nodes: Search nodes; 0 for the perimeter-sum solver.
        time_s: Wall-clock seconds, or the time limit when it was hit.
        lb: Proven lower bound, ``None`` on error.
        ub: Value of the returned partition, ``None`` on error.
        iters: Bisection steps (binary search only).
        status: ``"Optimal"``, ``"TimeLimit"`` or ``"error"``.
    """

    name: str
    n: int
    solver: str
    nodes: int
    time_s: float
    lb: Bound
    ub: Bound
    iters: int | None
    status: str

    def __post_init__(self) -> None:
        if self.lb is not None and self.ub is not None and self.lb > self.ub:
            raise ValueError(f"{self.name}/{self.solver}: lb {self.lb} exceeds ub {self.ub}")

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary with CSV-formatted cells."""
        return dict(zip(CSV_HEADER, self._cells()))

    def _cells(self) -> list[str]:
        return [
            self.name,
            str(self.n),
            self.solver,
            str(self.nodes),
            repr(self.time_s),
            _format_bound(self.lb),
            _format_bound(self.ub),
            "" if self.iters is None else str(self.iters),
            self.status,
        ]


def _format_bound(value: Bound) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return format_rational(value)
    return repr(value)


def _parse_bound(text: str) -> Bound:
    if not text:
        return None
    try:
        return parse_rational(text)
    except ValueError:
        return float(text)


def _stats_row(
    instance: Instance, solver: str, stats: SearchStats, limit: float | None, iters: int | None
) -> BenchRow:
    timed_out = stats.status == "TimeLimit"
    return BenchRow(
        name=instance.name,
        n=instance.n,
        solver=solver,
        nodes=stats.nodes,
        time_s=limit if timed_out and limit is not None else stats.elapsed,
        lb=stats.bound_lb,
        ub=stats.bound_ub,
        iters=iters,
        status=stats.status,
    )


def _run_peri_sum(instance: Instance, limit: float | None, config: SolverConfig) -> BenchRow:
    start = time.perf_counter()
    _, value = solve_peri_sum(instance)
    return BenchRow(
        name=instance.name,
        n=instance.n,
        solver="peri-sum-clws",
        nodes=0,
        time_s=time.perf_counter() - start,
        lb=value,
        ub=value,
        iters=None,
        status="Optimal",
    )


def _run_peri_max(instance: Instance, limit: float | None, config: SolverConfig) -> BenchRow:
    _, stats = solve_peri_max_bb(instance, limit, config=config)
    return _stats_row(instance, "peri-max-bb", stats, limit, None)


def _run_aspect_bb(instance: Instance, limit: float | None, config: SolverConfig) -> BenchRow:
    _, stats = solve_aspect_exact_bb(instance, limit, config=config)
    return _stats_row(instance, "aspect-bb", stats, limit, None)


def _run_aspect_bs(instance: Instance, limit: float | None, config: SolverConfig) -> BenchRow:
    _, _, trace, stats = solve_aspect_binary_search(instance, limit, config=config)
    return _stats_row(instance, "aspect-binsearch", stats, limit, len(trace.iterations))


SOLVERS: dict[str, Callable[[Instance, float | None, SolverConfig], BenchRow]] = {
    "peri-sum-clws": _run_peri_sum,
    "peri-max-bb": _run_peri_max,
    "aspect-bb": _run_aspect_bb,
    "aspect-binsearch": _run_aspect_bs,
}


def bench_instance(
    instance: Instance,
    solver: str,
    time_limit: float | None = None,
    *,
    config: SolverConfig | None = None,
) -> BenchRow:
    """Run one solver on one instance; a crash becomes a ``status="error"`` row.

    Raises:
        KeyError: If *solver* is not in ``SOLVERS``.
    """
    run = SOLVERS[solver]
    cfg = resolve_config(config)
    start = time.perf_counter()
    try:
        return run(instance, time_limit, cfg)
    except Exception:
        logger.exception("solver %s failed on %s", solver, instance.name)
        return BenchRow(
            name=instance.name,
            n=instance.n,
            solver=solver,
            nodes=0,
            time_s=time.perf_counter() - start,
            lb=None,
            ub=None,
            iters=None,
            status="error",
        )


def _bench_job(job: tuple[dict[str, Any], str, float | None, dict[str, Any]]) -> list[str]:
    # Inputs and outputs cross the process boundary as plain dicts and CSV cells.
    doc, solver, limit, config_fields = job
    row = bench_instance(
        instance_from_dict(doc), solver, limit, config=SolverConfig(**config_fields)
    )
    return row._cells()


def _row_from_cells(cells: Sequence[str]) -> BenchRow:
    name, n, solver, nodes, time_s, lb, ub, iters, status = cells
    return BenchRow(
        name=name,
        n=int(n),
        solver=solver,
        nodes=int(nodes),
        time_s=float(time_s),
        lb=_parse_bound(lb),
        ub=_parse_bound(ub),
        iters=int(iters) if iters else None,
        status=status,
    )


def run_bench(
    instances: Iterable[Instance],
    solvers: Sequence[str],
    time_limit: float | None = None,
    *,
    jobs: int = 1,
    config: SolverConfig | None = None,
) -> list[BenchRow]:
    """Benchmark every solver on every instance.

    Rows come back in input order (instance-major, then *solvers* order)
    whatever the completion order. ``jobs > 1`` spreads the pairs over a
    process pool.

    Raises:
        ValueError: On an unknown solver id or ``jobs < 1``.

    Example::

        rows = run_bench([inst], ["peri-sum-clws", "peri-max-bb"], time_limit=10)
        print(rows_to_csv(rows))
    """
    unknown = [s for s in solvers if s not in SOLVERS]
    if unknown:
        raise ValueError(f"Unknown solvers {unknown}; choose from {sorted(SOLVERS)}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    cfg = resolve_config(config)
    pairs = [(inst, solver) for inst in instances for solver in solvers]
    if jobs == 1:
        return [bench_instance(inst, solver, time_limit, config=cfg) for inst, solver in pairs]
    fields = asdict(cfg)
    work = [(inst.to_dict(), solver, time_limit, fields) for inst, solver in pairs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [_row_from_cells(cells) for cells in pool.map(_bench_job, work)]


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    """Render rows under the fixed header ``name,n,solver,...,status``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row._cells())
    return buffer.getvalue()


def parse_csv(text: str) -> list[BenchRow]:
    """Inverse of ``rows_to_csv``.

    Raises:
        ValueError: If the header differs from ``CSV_HEADER`` or a cell is
            malformed.
    """
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"Expected CSV header {','.join(CSV_HEADER)}, got {header}")
    rows: list[BenchRow] = []
    for number, cells in enumerate(reader, start=2):
        if not cells:
            continue
        if len(cells) != len(CSV_HEADER):
            raise ValueError(f"line {number}: expected {len(CSV_HEADER)} cells, got {len(cells)}")
        rows.append(_row_from_cells(cells))
    return rows
