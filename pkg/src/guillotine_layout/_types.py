"""Shared protocols and type aliases for guillotine-layout."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Protocol, Union, runtime_checkable

__all__ = [
    "GeneratorClass",
    "MethodName",
    "ModelKind",
    "ObjectiveName",
    "Rational",
    "RationalLike",
    "SearchStatus",
    "Sense",
    "WeightOracle",
]

# Exact numbers used throughout core arithmetic.
Rational = Fraction

# Anything accepted where a rational is expected on input.
RationalLike = Union[Fraction, int, str]

# CLI / report spelling of the optimized objective.
ObjectiveName = Literal["peri-sum", "peri-max", "aspect"]

# Solution methods selectable from the command line.
MethodName = Literal["clws", "bb", "binsearch", "brute"]

# Instance classes of the random generator.
GeneratorClass = Literal["U", "MU", "MN"]

# Termination status of a search.
SearchStatus = Literal["Optimal", "TimeLimit", "Infeasible"]

# Linear constraint sense.
Sense = Literal["<=", "=", ">="]

# The three MIP models that can be built and exported.
ModelKind = Literal["peri-max", "aspect-reform", "aspect-decision"]


@runtime_checkable
class WeightOracle(Protocol):
    """Weight function ``w(i, j)`` defined for ``0 <= i < j <= n``.

    Any callable taking two ints satisfies this protocol, so CLWS solvers
    accept plain functions, lambdas and bound methods alike.

    Example::

        def w(i: int, j: int) -> Fraction:
            return Fraction(j - i) ** 2

        assert isinstance(w, WeightOracle)
    """

    def __call__(self, i: int, j: int, /) -> Fraction: ...
