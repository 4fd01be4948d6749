"""Tests for the 2-Partition reductions and the subset-sum oracle."""

from __future__ import annotations

from fractions import Fraction

import pytest

from guillotine_layout.config import SolverConfig
from guillotine_layout.core import Instance, ObjectiveKind, Partition, objective_key, realize
from guillotine_layout.exact import solve_peri_max_bb
from guillotine_layout.exceptions import ProblemSizeError
from guillotine_layout.instances import (
    TwoPartitionInstance,
    reduce_2partition_to_aspect,
    reduce_2partition_to_perimax,
    solve_2partition_dp,
)


class TestTwoPartitionInstance:
    def test_properties(self) -> None:
        tp = TwoPartitionInstance.of([3, 1, 1, 2, 2, 1])
        assert (tp.total, tp.c_max, tp.c_min) == (10, 3, 1)

    @pytest.mark.parametrize("values", [[], [0, 1], [2, -1], [True, 1]])
    def test_invalid(self, values: list[int]) -> None:
        with pytest.raises(ValueError):
            TwoPartitionInstance.of(values)


class TestDP:
    @pytest.mark.parametrize(
        ("values", "expected"),
        [
            ([1, 1, 2], True),
            ([1, 1, 1], False),
            ([3, 1, 1, 2, 2, 1], True),
            ([5], False),
            ([2, 2], True),
            ([1, 2, 5], False),
        ],
    )
    def test_known(self, values: list[int], expected: bool) -> None:
        assert solve_2partition_dp(TwoPartitionInstance.of(values)) is expected

    def test_size_guard(self) -> None:
        tp = TwoPartitionInstance.of([60, 60])
        with pytest.raises(ProblemSizeError) as info:
            solve_2partition_dp(tp, config=SolverConfig(dp_max_sum=100))
        assert info.value.size == 120


class TestPeriMaxReduction:
    """Maximum perimeter reaches 4 c_max exactly on yes-instances."""

    def test_yes_instance(self, yes_two_partition: TwoPartitionInstance) -> None:
        inst, threshold = reduce_2partition_to_perimax(yes_two_partition)
        assert (inst.L1, inst.L2) == (2, 4)
        assert inst.areas == (2, 2, 4)
        assert threshold == 8
        _, stats = solve_peri_max_bb(inst)
        assert stats.bound_ub == 8

    def test_witness_layout(self, yes_two_partition: TwoPartitionInstance) -> None:
        # {1,2} and {3} are the two halves
        inst, threshold = reduce_2partition_to_perimax(yes_two_partition)
        layout = realize(inst, Partition.from_one_based([[1, 2], [3]]))
        assert objective_key(layout, ObjectiveKind.PERI_MAX) == threshold

    def test_no_instance(self, no_two_partition: TwoPartitionInstance) -> None:
        inst, threshold = reduce_2partition_to_perimax(no_two_partition)
        assert inst.L1 == Fraction(3, 2)
        _, stats = solve_peri_max_bb(inst)
        assert stats.bound_ub is not None and stats.bound_ub > threshold

    def test_meta(self, yes_two_partition: TwoPartitionInstance) -> None:
        inst, _ = reduce_2partition_to_perimax(yes_two_partition)
        assert inst.meta_dict == {"reduction": "peri-max"}


class TestAspectReduction:
    def test_constants(self, yes_two_partition: TwoPartitionInstance) -> None:
        inst, threshold = reduce_2partition_to_aspect(yes_two_partition)
        assert threshold == 50
        assert inst.L1 == Fraction(2601, 50)
        assert inst.L2 == 2
        assert inst.areas[-4:] == (50, 50, Fraction(1, 50), Fraction(1, 50))
        assert isinstance(inst, Instance)

    def test_witness_reaches_threshold(self, yes_two_partition: TwoPartitionInstance) -> None:
        inst, threshold = reduce_2partition_to_aspect(yes_two_partition)
        # halves {1,2} and {3}, each with one big and one tiny rectangle
        layout = realize(inst, Partition.from_one_based([[1, 2, 4, 6], [3, 5, 7]]))
        assert objective_key(layout, ObjectiveKind.ASPECT_RATIO) <= threshold
