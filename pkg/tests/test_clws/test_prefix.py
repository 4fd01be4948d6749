"""Tests for sorted prefix sums, the layer weight and concavity."""

from __future__ import annotations

from fractions import Fraction

import pytest

from guillotine_layout.clws import (
    PrefixAreas,
    check_concavity,
    concavity_margin,
    weight,
)


def _fractions(*values: int | str) -> list[Fraction]:
    return [Fraction(v) for v in values]


class TestPrefixAreas:
    """Stable sort and integer-scaled prefix sums."""

    def test_sorts_stably(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions(2, 1, 1))
        assert prefix.perm == (1, 2, 0)
        assert prefix.sorted_areas == (1, 1, 2)
        assert prefix.prefix == (0, 1, 2, 4)

    def test_rational_scale(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions("1/2", "1/3", "2/3"))
        assert prefix.scale == 6
        assert prefix.scaled_prefix == (0, 2, 5, 9)
        assert prefix.prefix[-1] == Fraction(3, 2)

    def test_segment_area(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions(3, 1, 2))
        assert prefix.segment_area(1, 3) == 5
        assert prefix.n == 3


class TestWeight:
    def test_micro_values(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions(1, 1, 2))
        assert weight(prefix, Fraction(2), 0, 2) == 8
        assert weight(prefix, Fraction(2), 2, 3) == 6
        assert weight(prefix, Fraction(2), 0, 3) == 16

    @pytest.mark.parametrize(("i", "j"), [(1, 1), (2, 1), (-1, 2), (0, 4)])
    def test_rejects_bad_range(self, i: int, j: int) -> None:
        prefix = PrefixAreas.from_areas(_fractions(1, 1, 2))
        with pytest.raises(ValueError, match="0 <= i < j"):
            weight(prefix, Fraction(2), i, j)


class TestConcavity:
    """The single-layer weight satisfies the strict quadrangle inequality."""

    def test_unit_areas_closed_form(self) -> None:
        # margin = (2 / L1) * 2 * (j1 - j0) * (i1 - i0)
        prefix = PrefixAreas.from_areas(_fractions(*([1] * 6)))
        margin = concavity_margin(prefix, Fraction(1), 0, 2, 3, 6)
        assert margin == 2 * 2 * 3 * 2

    def test_margin_positive_on_rational_areas(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions("1/7", "2/3", 5, "9/2", 1))
        assert concavity_margin(prefix, Fraction(3, 2), 0, 1, 2, 5) > 0

    def test_randomized_check_passes(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions(*range(1, 30)))
        report = check_concavity(prefix, Fraction(5), samples=200, seed=7)
        assert report.passed
        assert report.counterexample is None
        assert report.to_dict() == {
            "passed": True,
            "samples": 200,
            "counterexample": None,
            "margin": None,
        }

    def test_zero_samples(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions(1))
        assert check_concavity(prefix, Fraction(1), samples=0).samples == 0

    def test_too_small(self) -> None:
        prefix = PrefixAreas.from_areas(_fractions(1, 1))
        with pytest.raises(ValueError, match="n >= 3"):
            check_concavity(prefix, Fraction(1), samples=5)
