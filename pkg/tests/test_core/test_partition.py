"""Tests for Partition validation, canonical form and geometry."""

from __future__ import annotations

from fractions import Fraction

import pytest

from guillotine_layout.core import Instance, Partition, canonicalize, realize
from guillotine_layout.exceptions import PartitionValidationError
from guillotine_layout.testing import assert_layout_valid


class TestPartitionValidate:
    """validate() names the first offending index."""

    def test_valid(self) -> None:
        Partition.from_one_based([[1, 2], [3]]).validate(3)

    def test_duplicate(self) -> None:
        with pytest.raises(PartitionValidationError) as info:
            Partition.from_one_based([[1, 2], [2, 3]]).validate(3)
        assert info.value.reason == "duplicate"
        assert info.value.index == 1

    def test_missing(self) -> None:
        with pytest.raises(PartitionValidationError) as info:
            Partition.from_one_based([[1], [3]]).validate(3)
        assert info.value.reason == "missing"
        assert info.value.index == 1

    def test_out_of_range(self) -> None:
        with pytest.raises(PartitionValidationError, match="outside 1..3") as info:
            Partition.from_one_based([[1, 2, 4]]).validate(3)
        assert info.value.reason == "out-of-range"

    def test_empty_layer(self) -> None:
        with pytest.raises(PartitionValidationError) as info:
            Partition.of([[0, 1, 2], []]).validate(3)
        assert info.value.reason == "empty-layer"
        assert info.value.index is None


class TestCanonicalize:
    """Layers sorted by size descending, then smallest member."""

    def test_orders_layers(self) -> None:
        p = canonicalize(Partition.from_one_based([[3], [2, 1]]))
        assert p.to_one_based() == [[1, 2], [3]]

    def test_equal_sizes_by_smallest_member(self) -> None:
        p = canonicalize(Partition.from_one_based([[4, 2], [3, 1]]))
        assert p.to_one_based() == [[1, 3], [2, 4]]

    def test_idempotent(self) -> None:
        once = canonicalize(Partition.from_one_based([[5], [2, 4], [1, 3]]))
        assert canonicalize(once) == once

    def test_accepts_plain_sequences(self) -> None:
        assert canonicalize([[2], [0, 1]]).layers == ((0, 1), (2,))

    def test_str(self) -> None:
        assert str(Partition.from_one_based([[1, 2], [3]])) == "{{1,2},{3}}"


class TestRealize:
    """Exact layer heights and widths."""

    def test_micro_two_layers(self, micro_instance: Instance) -> None:
        layout = realize(micro_instance, Partition.from_one_based([[1, 2], [3]]))
        assert layout.layer_heights == (1, 1)
        assert [r.width for r in layout.rects] == [1, 1, 2]
        assert_layout_valid(layout)

    def test_micro_uneven(self, micro_instance: Instance) -> None:
        layout = realize(micro_instance, Partition.from_one_based([[1, 3], [2]]))
        assert layout.layer_heights == (Fraction(3, 2), Fraction(1, 2))
        assert layout.rects[0].width == Fraction(2, 3)
        assert layout.rects[2].width == Fraction(4, 3)
        assert_layout_valid(layout)

    def test_single_rectangle(self, single_instance: Instance) -> None:
        layout = realize(single_instance, Partition.of([[0]]))
        assert layout.rects[0].width == 3
        assert layout.rects[0].height == 2

    def test_rational_instance(self, rational_instance: Instance) -> None:
        layout = realize(rational_instance, Partition.from_one_based([[1, 3], [2, 4]]))
        assert_layout_valid(layout)

    def test_invalid_partition(self, micro_instance: Instance) -> None:
        with pytest.raises(PartitionValidationError):
            realize(micro_instance, Partition.from_one_based([[1, 2]]))

    def test_to_dict_one_based(self, micro_instance: Instance) -> None:
        doc = realize(micro_instance, Partition.from_one_based([[1, 3], [2]])).to_dict()
        assert doc["partition"] == [[1, 3], [2]]
        assert doc["layer_heights"] == ["3/2", "1/2"]
        assert doc["rects"][1] == {"index": 2, "layer": 2, "width": "2", "height": "1/2"}
