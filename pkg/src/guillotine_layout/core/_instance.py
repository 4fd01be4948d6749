"""Instance: the hard rectangle plus the soft-rectangle areas."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from guillotine_layout._types import RationalLike
from guillotine_layout.exceptions import InstanceValidationError

__all__ = ["Instance", "format_rational", "parse_rational"]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Convert an int, a ``Fraction`` or a ``"p"`` / ``"p/q"`` string to a ``Fraction``.

    Floats are refused: every number entering the core must be exact.

    Raises:
        ValueError: On malformed text or a float.
        ZeroDivisionError: On a ``"p/0"`` string.

    Example::

        assert parse_rational("6/4") == Fraction(3, 2)
        assert parse_rational(7) == Fraction(7)
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):  # pyright: ignore[reportUnnecessaryIsInstance]
        match = _RATIONAL_RE.match(value)
        if match is None:
            raise ValueError(f"Not a rational number: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ZeroDivisionError(f"Zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise ValueError(f"Not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a rational in lowest terms: ``"p"`` or ``"p/q"``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True)
class Instance:
    """A hard rectangle ``L1 x L2`` to be cut into soft rectangles of given areas.

    Rectangle ``i`` (0-based internally) has area ``areas[i]``. The areas
    sum exactly to ``L1 * L2``.

    Attributes:
        L1: Length of the hard rectangle (width of every layer).
        L2: Height of the hard rectangle.
        areas: Soft-rectangle areas, all positive.
        name: Optional label used in reports and file headers.
        meta: Free-form string metadata (generator class, seed, ...).
            Not part of equality.

    Example::

        inst = Instance.create(L1=2, L2=2, areas=[1, 1, 2], name="micro")
        assert inst.n == 3
    """

    L1: Fraction
    L2: Fraction
    areas: tuple[Fraction, ...]
    name: str = ""
    meta: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not self.areas:
            raise InstanceValidationError("Instance needs at least one rectangle")
        if self.L1 <= 0 or self.L2 <= 0:
            raise InstanceValidationError(
                f"Hard rectangle sides must be positive, got L1={self.L1}, L2={self.L2}"
            )
        for index, area in enumerate(self.areas):
            if area <= 0:
                raise InstanceValidationError(
                    f"Area of rectangle {index + 1} must be positive, got {area}"
                )
        total = sum(self.areas, Fraction(0))
        if total != self.L1 * self.L2:
            raise InstanceValidationError(
                f"Areas sum to {total} but L1 * L2 = {self.L1 * self.L2}"
            )

    @classmethod
    def create(
        cls,
        *,
        L1: RationalLike,
        L2: RationalLike,
        areas: Iterable[RationalLike],
        name: str = "",
        meta: Mapping[str, str] | None = None,
    ) -> Instance:
        """Build an instance from ints, fractions or ``"p/q"`` strings.

        Raises:
            InstanceValidationError: If any invariant fails.
            ValueError: If a number cannot be parsed.
        """
        return cls(
            L1=parse_rational(L1),
            L2=parse_rational(L2),
            areas=tuple(parse_rational(a) for a in areas),
            name=name,
            meta=tuple(sorted((meta or {}).items())),
        )

    @property
    def n(self) -> int:
        """Number of soft rectangles."""
        return len(self.areas)

    @property
    def total_area(self) -> Fraction:
        return self.L1 * self.L2

    @property
    def meta_dict(self) -> dict[str, str]:
        return dict(self.meta)

    def with_areas(self, areas: Sequence[Fraction], *, name: str | None = None) -> Instance:
        """Return a copy with *areas* replaced (used for permutation tests)."""
        return Instance(
            L1=self.L1,
            L2=self.L2,
            areas=tuple(areas),
            name=self.name if name is None else name,
            meta=self.meta,
        )

    def to_dict(self) -> dict[str, Any]:
        """Return the versioned JSON document of this instance."""
        result: dict[str, Any] = {
            "version": 1,
            "name": self.name,
            "L1": format_rational(self.L1),
            "L2": format_rational(self.L2),
            "areas": [format_rational(a) for a in self.areas],
        }
        if self.meta:
            result["meta"] = dict(self.meta)
        return result
