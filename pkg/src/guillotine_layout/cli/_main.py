"""``guillotine-layout`` command line."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO

from guillotine_layout.clws import solve_peri_sum
from guillotine_layout.config import get_global_config
from guillotine_layout.core import (
    Instance,
    ObjectiveKind,
    Partition,
    canonicalize,
    evaluate,
    format_rational,
    realize,
)
from guillotine_layout.exact import (
    SearchStats,
    brute_force,
    solve_aspect_binary_search,
    solve_aspect_exact_bb,
    solve_peri_max_bb,
)
from guillotine_layout.exceptions import (
    GuillotineError,
    IncompatibleMethodError,
    InstanceFormatError,
)
from guillotine_layout.instances import (
    GeneratorConfig,
    atomic_write_text,
    generate,
    read_instance,
    read_json_document,
    read_two_partition,
    reduce_2partition_to_aspect,
    reduce_2partition_to_perimax,
    write_instance,
)
from guillotine_layout.mip import (
    ModelMetadata,
    check_solution,
    decode_assignment,
    emit_lp,
    model_summary,
    read_metadata,
    read_solution,
    sidecar_path,
    write_metadata,
)
from guillotine_layout.report import SOLVERS, BenchStore, render_svg, rows_to_csv, run_bench

__all__ = [
    "EXIT_INFEASIBLE",
    "EXIT_INPUT",
    "EXIT_OK",
    "EXIT_TIME_LIMIT",
    "EXIT_USAGE",
    "METHODS",
    "build_parser",
    "main",
]

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_TIME_LIMIT = 4

# Methods able to optimize each objective; the first is the default.
METHODS: dict[str, tuple[str, ...]] = {
    "peri-sum": ("clws", "brute"),
    "peri-max": ("bb", "brute"),
    "aspect": ("bb", "binsearch", "brute"),
}

_KIND = {
    "peri-sum": ObjectiveKind.PERI_SUM,
    "peri-max": ObjectiveKind.PERI_MAX,
    "aspect": ObjectiveKind.ASPECT_RATIO,
    "aspect-surrogate": ObjectiveKind.ASPECT_SURROGATE,
}


class _Output:
    """Writes a result as human text, or as JSON under --json."""

    def __init__(self, stdout: TextIO) -> None:
        self.stdout = stdout

    def emit(self, args: argparse.Namespace, human: str, document: dict[str, Any]) -> None:
        if args.json:
            self.stdout.write(json.dumps(document, indent=2) + "\n")
        else:
            self.stdout.write(human.rstrip("\n") + "\n")


def _value_text(value: Fraction | float) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return repr(value)


def _read_partition(path: str, n: int) -> Partition:
    doc = read_json_document(path)
    if not isinstance(doc, list) or not all(
        isinstance(layer, list) and all(type(i) is int for i in layer) for layer in doc
    ):
        raise InstanceFormatError(
            code="malformed-json", detail="partition must be an array of arrays of integers"
        )
    partition = Partition.from_one_based(doc)
    partition.validate(n)
    return partition


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace, out: _Output) -> int:
    threshold: Fraction | None = None
    if args.two_partition is not None:
        tp = read_two_partition(args.two_partition)
        if args.reduction == "peri-max":
            instance, threshold = reduce_2partition_to_perimax(tp)
        else:
            instance, threshold = reduce_2partition_to_aspect(tp)
    else:
        instance = generate(GeneratorConfig(args.instance_class, args.n, args.seed))
    write_instance(instance, args.out)
    document: dict[str, Any] = {"out": str(args.out), "instance": instance.to_dict()}
    human = f"wrote {instance.name} (n={instance.n}) to {args.out}"
    if threshold is not None:
        document["threshold"] = format_rational(threshold)
        human += f"\nthreshold: {format_rational(threshold)}"
    out.emit(args, human, document)
    return EXIT_OK


def _solve(
    instance: Instance, objective: str, method: str, time_limit: float | None
) -> tuple[Partition, Fraction | float, dict[str, Any], str]:
    """Dispatch to the solver; returns (partition, value, stats document, status)."""
    kind = _KIND[objective]
    if method == "brute":
        partition, value = brute_force(instance, kind)
        stats: dict[str, Any] = {"status": "Optimal"}
        return partition, value, stats, "Optimal"
    if method == "clws":
        partition, value = solve_peri_sum(instance)
        stats = {"status": "Optimal", "lb": str(value), "ub": str(value)}
        return partition, value, stats, "Optimal"
    if method == "binsearch":
        partition, value, trace, search = solve_aspect_binary_search(instance, time_limit)
        stats = search.to_dict()
        stats["iterations"] = len(trace.iterations)
        stats["phi_low"] = trace.phi_low
        stats["phi_up"] = trace.phi_up
        stats["gap"] = get_global_config().binary_search_gap
        return partition, value, stats, search.status
    solver: Callable[..., tuple[Partition, SearchStats]]
    solver = solve_peri_max_bb if objective == "peri-max" else solve_aspect_exact_bb
    partition, search = solver(instance, time_limit)
    value = search.bound_ub
    assert value is not None
    return partition, value, search.to_dict(), search.status


def _cmd_solve(args: argparse.Namespace, out: _Output) -> int:
    supported = METHODS[args.objective]
    method = args.method or supported[0]
    if method not in supported:
        raise IncompatibleMethodError(
            objective=args.objective, method=method, supported=list(supported)
        )
    instance = read_instance(args.input)
    partition, value, stats, status = _solve(instance, args.objective, method, args.time_limit)
    partition = canonicalize(partition)
    if args.partition_out is not None:
        atomic_write_text(args.partition_out, json.dumps(partition.to_one_based()) + "\n")
    document = {
        "objective": args.objective,
        "method": method,
        "value": _value_text(value),
        "partition": partition.to_one_based(),
        "stats": stats,
    }
    lines = [
        f"objective: {args.objective} ({method})",
        f"value: {_value_text(value)} (~{float(value):.6g})",
        f"partition: {partition.to_one_based()}",
        f"status: {status}",
    ]
    if "nodes" in stats:
        lines.append(f"nodes: {stats['nodes']}  time: {stats['elapsed']:.3f}s")
    if "iterations" in stats:
        lines.append(
            f"iterations: {stats['iterations']}  "
            f"interval: [{stats['phi_low']:.6g}, {stats['phi_up']:.6g}]"
        )
    out.emit(args, "\n".join(lines), document)
    return EXIT_TIME_LIMIT if status == "TimeLimit" else EXIT_OK


def _cmd_export_mip(args: argparse.Namespace, out: _Output) -> int:
    if args.model == "aspect-decision" and args.phi is None:
        raise _UsageError("--phi is required with --model aspect-decision")
    if args.model != "aspect-decision" and args.phi is not None:
        raise _UsageError("--phi only applies to --model aspect-decision")
    instance = read_instance(args.input)
    metadata = ModelMetadata(instance, args.model, with_cuts=args.cuts, phi=args.phi)
    model = metadata.build()
    header = [f"source {Path(args.input).name}"]
    atomic_write_text(args.out, emit_lp(model, header=header))
    meta_path = sidecar_path(args.out)
    write_metadata(metadata, meta_path)
    summary = model_summary(model)
    document = {"out": str(args.out), "metadata": str(meta_path), **summary.to_dict()}
    human = (
        f"wrote {args.model} model to {args.out}: "
        f"{summary.variables} variables, {summary.constraints} rows"
    )
    out.emit(args, human, document)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, out: _Output) -> int:
    model_path = Path(args.model)
    meta_path = model_path if model_path.suffix == ".json" else sidecar_path(model_path)
    metadata = read_metadata(meta_path)
    model = metadata.build()
    try:
        assignment = read_solution(Path(args.solution).read_text(encoding="utf-8"))
    except ValueError as exc:
        raise InstanceFormatError(code="bad-number", detail=str(exc)) from None
    violations = check_solution(model, assignment, args.tolerance)
    document: dict[str, Any] = {
        "feasible": not violations,
        "violations": [v.to_dict() for v in violations],
    }
    lines = [f"{len(violations)} violation(s)"]
    lines += [
        f"  {v.constraint}: lhs={v.lhs:.6g} {v.sense} rhs={v.rhs:.6g} (slack {v.slack:.3g})"
        for v in violations
    ]
    if not violations:
        decoded = decode_assignment(metadata.instance, assignment)
        document["decoded"] = decoded.to_dict()
        lines.append(f"partition: {decoded.partition.to_one_based()}")
        lines.append(
            f"peri-max: {format_rational(decoded.peri_max)}  "
            f"aspect: {format_rational(decoded.aspect)}"
        )
    out.emit(args, "\n".join(lines), document)
    return EXIT_OK if not violations else EXIT_INFEASIBLE


def _cmd_eval(args: argparse.Namespace, out: _Output) -> int:
    instance = read_instance(args.input)
    partition = canonicalize(_read_partition(args.partition, instance.n))
    value = evaluate(realize(instance, partition), _KIND[args.objective])
    document = {
        "objective": args.objective,
        "value": _value_text(value),
        "partition": partition.to_one_based(),
    }
    out.emit(args, f"{args.objective}: {_value_text(value)}", document)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace, out: _Output) -> int:
    solvers = [s.strip() for s in args.solvers.split(",") if s.strip()]
    unknown = [s for s in solvers if s not in SOLVERS]
    if unknown or not solvers:
        raise _UsageError(f"unknown solvers {unknown}; choose from {', '.join(SOLVERS)}")
    files = sorted(Path(args.dir).glob("*.json"))
    instances = [read_instance(path) for path in files]
    rows = run_bench(instances, solvers, args.time_limit, jobs=args.jobs)
    text = rows_to_csv(rows)
    if args.out is not None:
        atomic_write_text(args.out, text)
    if args.db is not None:
        BenchStore(args.db).save_rows(args.label, rows)
    if args.json:
        out.emit(args, "", {"rows": [row.to_dict() for row in rows]})
    elif args.out is None:
        out.stdout.write(text)
    else:
        out.stdout.write(f"wrote {len(rows)} rows to {args.out}\n")
    return EXIT_OK


def _cmd_render(args: argparse.Namespace, out: _Output) -> int:
    instance = read_instance(args.input)
    partition = _read_partition(args.partition, instance.n)
    svg = render_svg(realize(instance, partition), width=args.width, labels=not args.no_labels)
    atomic_write_text(args.out, svg)
    out.emit(args, f"wrote {args.out}", {"out": str(args.out)})
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _UsageError(Exception):
    pass


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _aspect_threshold(text: str) -> Fraction:
    value = _rational(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"an aspect ratio is at least 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Return the top-level parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="guillotine-layout",
        description="Partition a rectangle into soft rectangles with two-stage guillotine cuts.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate an instance file")
    gen.add_argument("--class", dest="instance_class", choices=["U", "MU", "MN"], default="U")
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--two-partition", metavar="FILE", help="build a reduction instance instead")
    gen.add_argument("--reduction", choices=["peri-max", "aspect"], default="peri-max")
    gen.add_argument("--out", required=True, metavar="FILE")
    gen.set_defaults(handler=_cmd_gen)

    solve = sub.add_parser("solve", parents=[common], help="optimize one objective")
    solve.add_argument("--in", dest="input", required=True, metavar="FILE")
    solve.add_argument("--objective", choices=sorted(METHODS), required=True)
    solve.add_argument("--method", choices=["clws", "bb", "binsearch", "brute"])
    solve.add_argument("--time-limit", type=_positive_float, metavar="SEC")
    solve.add_argument("--partition-out", metavar="FILE", help="also write the partition JSON")
    solve.set_defaults(handler=_cmd_solve)

    export = sub.add_parser("export-mip", parents=[common], help="write a model as LP text")
    export.add_argument("--in", dest="input", required=True, metavar="FILE")
    export.add_argument(
        "--model", choices=["peri-max", "aspect-reform", "aspect-decision"], required=True
    )
    export.add_argument("--phi", type=_aspect_threshold, help="threshold of the decision model")
    export.add_argument("--cuts", action="store_true", help="add the symmetry cuts")
    export.add_argument("--out", required=True, metavar="FILE.lp")
    export.set_defaults(handler=_cmd_export_mip)

    check = sub.add_parser("check", parents=[common], help="check a solution against a model")
    check.add_argument(
        "--model", required=True, metavar="FILE", help="exported LP file or its .lp.json sidecar"
    )
    check.add_argument("--solution", required=True, metavar="FILE.sol")
    check.add_argument("--tolerance", type=float, default=None)
    check.set_defaults(handler=_cmd_check)

    ev = sub.add_parser("eval", parents=[common], help="score a given partition")
    ev.add_argument("--in", dest="input", required=True, metavar="FILE")
    ev.add_argument("--partition", required=True, metavar="FILE.json")
    ev.add_argument("--objective", choices=sorted(_KIND), required=True)
    ev.set_defaults(handler=_cmd_eval)

    bench = sub.add_parser("bench", parents=[common], help="benchmark solvers on a directory")
    bench.add_argument("--dir", required=True, metavar="DIR")
    bench.add_argument("--solvers", default=",".join(SOLVERS), metavar="LIST")
    bench.add_argument("--time-limit", type=_positive_float, metavar="SEC")
    bench.add_argument("--out", metavar="FILE.csv")
    bench.add_argument("--jobs", type=int, default=1, metavar="K")
    bench.add_argument("--db", metavar="URL", help="also store rows in this database")
    bench.add_argument("--label", default="bench", help="run label used with --db")
    bench.set_defaults(handler=_cmd_bench)

    render = sub.add_parser("render", parents=[common], help="draw a partition as SVG")
    render.add_argument("--in", dest="input", required=True, metavar="FILE")
    render.add_argument("--partition", required=True, metavar="FILE.json")
    render.add_argument("--out", required=True, metavar="FILE.svg")
    render.add_argument("--width", type=int, default=480)
    render.add_argument("--no-labels", action="store_true")
    render.set_defaults(handler=_cmd_render)
    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity <= 0:
        return
    level = logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(
    argv: Sequence[str] | None = None,
    *,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Run the command line and return its exit code.

    Exit codes: 0 success or feasible, 1 infeasible or violations, 2 usage
    error, 3 input validation error, 4 time limit with an unproven result.

    Example::

        code = main(["solve", "--in", "micro.json", "--objective", "peri-sum", "--json"])
    """
    out_stream = stdout if stdout is not None else sys.stdout
    err_stream = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(out_stream), redirect_stderr(err_stream):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)
    if getattr(args, "jobs", 1) < 1:
        err_stream.write("error: --jobs must be >= 1\n")
        return EXIT_USAGE

    handler: Callable[[argparse.Namespace, _Output], int] = args.handler
    try:
        return handler(args, _Output(out_stream))
    except (_UsageError, IncompatibleMethodError) as exc:
        err_stream.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (GuillotineError, ValueError) as exc:
        err_stream.write(f"error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        err_stream.write(f"error: {exc}\n")
        return EXIT_INPUT
