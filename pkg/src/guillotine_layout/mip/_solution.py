"""Encode partitions as assignments, check them against a model, decode them back."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from guillotine_layout._types import ModelKind, Sense
from guillotine_layout.config import SolverConfig, resolve_config
from guillotine_layout.core import (
    Instance,
    ObjectiveKind,
    Partition,
    canonicalize,
    parse_rational,
    realize,
)
from guillotine_layout.core import objective_key as _objective_key
from guillotine_layout.exceptions import UnknownVariableError
from guillotine_layout.mip._model import Coefficient, LinearModel
from guillotine_layout.mip._model import VariableNaming as N

__all__ = [
    "DecodedSolution",
    "ModelSummary",
    "Violation",
    "check_solution",
    "decode_assignment",
    "encode_partition",
    "model_summary",
    "read_solution",
]


@dataclass(frozen=True, slots=True)
class Violation:
    """A row (or bound) not satisfied within tolerance.

    Attributes:
        constraint: Row name, or ``bound_<var>`` / ``binary_<var>``.
        lhs: Left-hand side value.
        sense: Row sense.
        rhs: Right-hand side.
        slack: Signed slack; negative means violated.
    """

    constraint: str
    lhs: float
    sense: Sense
    rhs: float
    slack: float

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary."""
        return {
            "constraint": self.constraint,
            "lhs": self.lhs,
            "sense": self.sense,
            "rhs": self.rhs,
            "slack": self.slack,
        }


@dataclass(frozen=True, slots=True)
class DecodedSolution:
    """Partition recovered from an assignment, with its true objective values.

    Attributes:
        partition: Canonical partition read from the ``x`` variables.
        model_value: Value of ``phi`` in the assignment, if present.
        peri_sum: Exact perimeter sum of the partition.
        peri_max: Exact maximum perimeter.
        aspect: Exact maximum aspect ratio, recomputed from the geometry.
    """

    partition: Partition
    model_value: float | None
    peri_sum: Fraction
    peri_max: Fraction
    aspect: Fraction

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary."""
        return {
            "partition": self.partition.to_one_based(),
            "model_value": self.model_value,
            "peri_sum": str(self.peri_sum),
            "peri_max": str(self.peri_max),
            "aspect": str(self.aspect),
        }


@dataclass(frozen=True, slots=True)
class ModelSummary:
    """Shape of a model: counts of variables and rows per family."""

    kind: ModelKind
    variables: int
    binaries: int
    constraints: int
    families: dict[str, int]

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary."""
        return {
            "kind": self.kind,
            "variables": self.variables,
            "binaries": self.binaries,
            "constraints": self.constraints,
            "families": dict(self.families),
        }


def model_summary(model: LinearModel) -> ModelSummary:
    """Count variables, binaries and rows per family.

    Example::

        summary = model_summary(build_peri_max_model(inst))
        assert summary.families["perimeter"] == inst.n ** 2
    """
    return ModelSummary(
        kind=model.kind,
        variables=len(model.variables),
        binaries=sum(1 for v in model.variables if v.binary),
        constraints=len(model.constraints),
        families=model.families(),
    )


def _layer_order(partition: Partition, with_cuts: bool) -> list[tuple[int, ...]]:
    canonical = canonicalize(partition)
    if not with_cuts:
        return list(canonical.layers)
    # rectangle i may only use layers 1..i
    return sorted(canonical.layers, key=lambda layer: layer[0])


def encode_partition(
    instance: Instance,
    partition: Partition,
    kind: ModelKind,
    *,
    with_cuts: bool = False,
) -> dict[str, Coefficient]:
    """Variable values describing *partition* in a model of *kind*.

    Layers are numbered in canonical order, or by smallest member when
    *with_cuts* (the order the symmetry cuts admit). ``w_i_k`` is the width
    of rectangle ``i`` in its layer, ``h_k`` the layer height, ``d_i_k`` is
    ``|w_i_k - h_k|`` and ``phi`` takes the value the model minimizes.
    Unused layers get zeros.

    Example::

        values = encode_partition(inst, Partition.from_one_based([[1, 2], [3]]), "peri-max")
        assert values["x_3_2"] == 1 and values["w_3_2"] == 2
    """
    partition.validate(instance.n)
    n = instance.n
    layers = _layer_order(partition, with_cuts)
    layout = realize(instance, Partition(tuple(layers)))
    values: dict[str, Coefficient] = {}
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            values[N.x(i, k)] = Fraction(0)
            values[N.w(i, k)] = Fraction(0)
            if kind == "aspect-reform":
                values[N.d(i, k)] = Fraction(0)
    for k in range(1, n + 1):
        values[N.y(k)] = Fraction(0)
        if kind == "aspect-decision":
            values[N.h(k)] = Fraction(0)
    worst_surrogate = 0.0
    for k, layer in enumerate(layers, start=1):
        height = layout.layer_heights[k - 1]
        values[N.y(k)] = Fraction(1)
        if kind == "aspect-decision":
            values[N.h(k)] = height
        for index in layer:
            i = index + 1
            width = layout.rects[index].width
            values[N.x(i, k)] = Fraction(1)
            values[N.w(i, k)] = width
            if kind == "aspect-reform":
                gap = abs(width - height)
                values[N.d(i, k)] = gap
                surrogate = float(gap) / math.sqrt(instance.areas[index])
                worst_surrogate = max(worst_surrogate, surrogate)
    if kind == "peri-max":
        values[N.PHI] = _objective_key(layout, ObjectiveKind.PERI_MAX)
    elif kind == "aspect-reform":
        values[N.PHI] = worst_surrogate
    return values


def _slack(lhs: Coefficient, sense: Sense, rhs: Coefficient) -> float:
    if sense == "<=":
        return float(rhs - lhs)
    if sense == ">=":
        return float(lhs - rhs)
    return -abs(float(lhs - rhs))


def check_solution(
    model: LinearModel,
    assignment: Mapping[str, Coefficient],
    tolerance: float | None = None,
    *,
    config: SolverConfig | None = None,
) -> list[Violation]:
    """Evaluate every row, bound and binary restriction of *model*.

    Returns:
        The violations, in declaration order; empty means feasible within
        the additive *tolerance* (default
        ``config.violation_tolerance``, 1e-6).

    Raises:
        UnknownVariableError: If *assignment* names an undeclared variable.
        ValueError: If *assignment* misses a declared variable.

    Example::

        model = build_peri_max_model(inst)
        assert check_solution(model, encode_partition(inst, best, "peri-max")) == []
    """
    for name in assignment:
        if not model.has_variable(name):
            raise UnknownVariableError(name=name)
    missing = [v.name for v in model.variables if v.name not in assignment]
    if missing:
        raise ValueError(f"Assignment misses {len(missing)} variables, first {missing[0]!r}")
    tol = resolve_config(config).violation_tolerance if tolerance is None else tolerance

    violations: list[Violation] = []
    for variable in model.variables:
        value = assignment[variable.name]
        if value < variable.lower - tol:
            violations.append(
                Violation(
                    f"bound_{variable.name}",
                    float(value),
                    ">=",
                    float(variable.lower),
                    _slack(value, ">=", variable.lower),
                )
            )
        if variable.upper is not None and value > variable.upper + tol:
            violations.append(
                Violation(
                    f"bound_{variable.name}",
                    float(value),
                    "<=",
                    float(variable.upper),
                    _slack(value, "<=", variable.upper),
                )
            )
        if variable.binary:
            off = min(abs(float(value)), abs(float(value) - 1))
            if off > tol:
                nearest = float(round(float(value)))
                violations.append(
                    Violation(f"binary_{variable.name}", float(value), "=", nearest, -off)
                )
    for row in model.constraints:
        lhs = row.activity(assignment)
        slack = _slack(lhs, row.sense, row.rhs)
        if slack < -tol:
            violations.append(Violation(row.name, float(lhs), row.sense, float(row.rhs), slack))
    return violations


def decode_assignment(
    instance: Instance, assignment: Mapping[str, Coefficient]
) -> DecodedSolution:
    """Read the partition off the ``x_i_k`` values (``> 1/2`` means in layer ``k``).

    The objective values are recomputed exactly from the partition; the
    model's own ``phi`` is passed through as ``model_value``.

    Raises:
        PartitionValidationError: If the ``x`` values do not assign every
            rectangle to exactly one layer.
    """
    layers: dict[int, list[int]] = {}
    for name, value in assignment.items():
        if not name.startswith("x_"):
            continue
        _, (i, k) = N.parse(name)
        if value > Fraction(1, 2):
            layers.setdefault(k, []).append(i - 1)
    partition = Partition.of(layers[k] for k in sorted(layers))
    partition.validate(instance.n)
    layout = realize(instance, canonicalize(partition))
    phi = assignment.get(N.PHI)
    return DecodedSolution(
        partition=layout.partition,
        model_value=None if phi is None else float(phi),
        peri_sum=_objective_key(layout, ObjectiveKind.PERI_SUM),
        peri_max=_objective_key(layout, ObjectiveKind.PERI_MAX),
        aspect=_objective_key(layout, ObjectiveKind.ASPECT_RATIO),
    )


def read_solution(text: str) -> dict[str, Coefficient]:
    """Parse ``name value`` lines into an assignment.

    Blank lines and lines starting with ``#`` or ``\\`` are skipped. Values
    may be decimals or exact ``p/q`` rationals.

    Raises:
        ValueError: On a malformed line (the message names the line number).

    Example::

        values = read_solution("x_1_1 1\\nw_1_1 2/3\\n")
        assert values["w_1_1"] == Fraction(2, 3)
    """
    values: dict[str, Coefficient] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "\\")):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {number}: expected 'name value', got {raw!r}")
        name, token = fields
        try:
            values[name] = parse_rational(token)
        except (ValueError, ZeroDivisionError):
            try:
                values[name] = float(token)
            except ValueError:
                raise ValueError(f"line {number}: bad value {token!r}") from None
    return values
