"""Solver-agnostic linear model: variables, rows and a linear objective."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from guillotine_layout._types import ModelKind, Sense
from guillotine_layout.exceptions import ModelBuildError, UnknownVariableError

__all__ = [
    "Coefficient",
    "Constraint",
    "LinearModel",
    "Term",
    "Variable",
    "VariableNaming",
]

Coefficient = Fraction | float
Term = tuple[Coefficient, str]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class VariableNaming:
    """Names of the model variables; indices are 1-based.

    Example::

        assert VariableNaming.x(1, 2) == "x_1_2"
    """

    PHI = "phi"

    @staticmethod
    def x(i: int, k: int) -> str:
        return f"x_{i}_{k}"

    @staticmethod
    def w(i: int, k: int) -> str:
        return f"w_{i}_{k}"

    @staticmethod
    def y(k: int) -> str:
        return f"y_{k}"

    @staticmethod
    def h(k: int) -> str:
        return f"h_{k}"

    @staticmethod
    def d(i: int, k: int) -> str:
        return f"d_{i}_{k}"

    @staticmethod
    def parse(name: str) -> tuple[str, tuple[int, ...]]:
        """Split ``"x_3_1"`` into ``("x", (3, 1))``.

        Raises:
            ValueError: If *name* is not one of the schemes above.
        """
        if name == VariableNaming.PHI:
            return name, ()
        role, *indices = name.split("_")
        arity = {"x": 2, "w": 2, "d": 2, "y": 1, "h": 1}.get(role)
        if arity is None or len(indices) != arity or not all(i.isdigit() for i in indices):
            raise ValueError(f"Not a model variable name: {name!r}")
        return role, tuple(int(i) for i in indices)


@dataclass(frozen=True, slots=True)
class Variable:
    """A model column.

    Attributes:
        name: Unique name.
        lower: Lower bound.
        upper: Upper bound, ``None`` for unbounded.
        binary: Integer 0/1 variable.
    """

    name: str
    lower: Coefficient = Fraction(0)
    upper: Coefficient | None = None
    binary: bool = False


@dataclass(frozen=True, slots=True)
class Constraint:
    """A named row ``sum(c * v) <sense> rhs``.

    Attributes:
        name: Unique row name.
        terms: ``(coefficient, variable)`` pairs, one per variable.
        sense: ``"<="``, ``"="`` or ``">="``.
        rhs: Right-hand side.
        family: Constraint family label (``"perimeter"``, ``"layer_order"``, ...).
    """

    name: str
    terms: tuple[Term, ...]
    sense: Sense
    rhs: Coefficient
    family: str

    def activity(self, values: Mapping[str, Coefficient]) -> Coefficient:
        """Left-hand side evaluated at *values*."""
        total: Coefficient = Fraction(0)
        for coefficient, name in self.terms:
            total += coefficient * values[name]
        return total


@dataclass(slots=True)
class LinearModel:
    """Variables, rows and a minimization objective, in declaration order.

    Rows may only mention declared variables; duplicate names are refused
    at build time.

    Example::

        model = LinearModel(name="demo", kind="peri-max")
        model.add_variable("phi")
        model.add_constraint("floor", [(1, "phi")], ">=", 3, family="demo")
        model.set_objective([(1, "phi")])
    """

    name: str
    kind: ModelKind
    with_cuts: bool = False
    variables: list[Variable] = field(default_factory=list[Variable])
    constraints: list[Constraint] = field(default_factory=list[Constraint])
    objective: tuple[Term, ...] = ()
    notes: list[str] = field(default_factory=list[str])
    _index: dict[str, Variable] = field(default_factory=dict[str, Variable], repr=False)
    _rows: set[str] = field(default_factory=set[str], repr=False)

    def add_variable(
        self,
        name: str,
        *,
        lower: Coefficient = Fraction(0),
        upper: Coefficient | None = None,
        binary: bool = False,
    ) -> str:
        """Declare a variable and return its name.

        Raises:
            ModelBuildError: On an invalid or duplicate name.
        """
        _check_name(name)
        if name in self._index:
            raise ModelBuildError(f"Duplicate variable name {name!r}")
        variable = Variable(name=name, lower=lower, upper=upper, binary=binary)
        self.variables.append(variable)
        self._index[name] = variable
        return name

    def add_constraint(
        self,
        name: str,
        terms: Iterable[tuple[Coefficient | int, str]],
        sense: Sense,
        rhs: Coefficient | int,
        *,
        family: str,
    ) -> Constraint:
        """Append a row; repeated variables have their coefficients merged.

        Raises:
            ModelBuildError: On an invalid or duplicate row name, or a term
                naming an undeclared variable.
        """
        _check_name(name)
        if name in self._rows:
            raise ModelBuildError(f"Duplicate constraint name {name!r}")
        row = Constraint(
            name=name,
            terms=self._merge(terms),
            sense=sense,
            rhs=_coefficient(rhs),
            family=family,
        )
        self.constraints.append(row)
        self._rows.add(name)
        return row

    def set_objective(self, terms: Iterable[tuple[Coefficient | int, str]]) -> None:
        """Set the minimization objective (empty for a feasibility model)."""
        self.objective = self._merge(terms)

    def variable(self, name: str) -> Variable:
        """Look up a declared variable.

        Raises:
            UnknownVariableError: If *name* is not declared.
        """
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(name=name) from None

    def has_variable(self, name: str) -> bool:
        return name in self._index

    def families(self) -> dict[str, int]:
        """Row count per constraint family, in first-appearance order."""
        counts: dict[str, int] = {}
        for row in self.constraints:
            counts[row.family] = counts.get(row.family, 0) + 1
        return counts

    def _merge(self, terms: Iterable[tuple[Coefficient | int, str]]) -> tuple[Term, ...]:
        merged: dict[str, Coefficient] = {}
        for coefficient, name in terms:
            if name not in self._index:
                raise ModelBuildError(f"Term references undeclared variable {name!r}")
            merged[name] = merged.get(name, Fraction(0)) + _coefficient(coefficient)
        return tuple((c, v) for v, c in merged.items())


def _check_name(name: str) -> None:
    if not _NAME_RE.match(name):
        raise ModelBuildError(f"Invalid name {name!r}: must match {_NAME_RE.pattern}")


def _coefficient(value: Coefficient | int) -> Coefficient:
    return Fraction(value) if isinstance(value, int) else value
