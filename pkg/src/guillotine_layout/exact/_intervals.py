"""Admissible layer heights for one rectangle under a threshold."""

from __future__ import annotations

import math
from fractions import Fraction

from guillotine_layout.exact._models import INFEASIBLE, HeightInterval, Infeasible

__all__ = ["height_interval_aspect", "height_interval_perimeter"]


def height_interval_perimeter(
    a: Fraction | int, phi: float | Fraction
) -> HeightInterval | Infeasible:
    """Heights ``h`` with ``2 * (h + a / h) <= phi``.

    The roots of ``h**2 - (phi / 2) * h + a``. Returns ``INFEASIBLE`` when
    ``phi < 4 * sqrt(a)`` (checked exactly as ``phi**2 < 16 * a``).

    Raises:
        ValueError: If ``a <= 0`` or ``phi <= 0``.

    Example::

        interval = height_interval_perimeter(Fraction(1), 4)
        assert (interval.lo, interval.hi) == (1.0, 1.0)
    """
    if a <= 0 or phi <= 0:
        raise ValueError(f"height interval needs a > 0 and phi > 0, got a={a}, phi={phi}")
    exact_phi = Fraction(phi)
    if exact_phi * exact_phi < 16 * Fraction(a):
        return INFEASIBLE
    half = float(phi) / 2
    root = math.sqrt(max(0.0, half * half - 4 * float(a)))
    hi = (half + root) / 2
    # product of the roots is a
    lo = float(a) / hi
    return HeightInterval(lo=min(lo, hi), hi=hi)


def height_interval_aspect(a: Fraction | int, phi: float | Fraction) -> HeightInterval:
    """Heights whose rectangle of area *a* has aspect ratio at most *phi*.

    ``[sqrt(a / phi), sqrt(a * phi)]``, never empty.

    Raises:
        ValueError: If ``a <= 0`` or ``phi < 1``.
    """
    if a <= 0:
        raise ValueError(f"area must be positive, got {a}")
    if phi < 1:
        raise ValueError(f"aspect ratio cannot be below 1, got {phi}")
    area = float(a)
    ratio = float(phi)
    return HeightInterval(lo=math.sqrt(area / ratio), hi=math.sqrt(area * ratio))
