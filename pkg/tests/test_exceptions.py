"""Tests for the GuillotineError hierarchy."""

from __future__ import annotations

import pytest

from guillotine_layout.core import Instance, Partition
from guillotine_layout.exceptions import (
    GuillotineError,
    IncompatibleMethodError,
    InstanceFormatError,
    InstanceValidationError,
    ModelBuildError,
    PartitionValidationError,
    ProblemSizeError,
    SameLayerSwapError,
    UnknownVariableError,
)


class TestGuillotineError:
    """Base exception for all guillotine-layout errors."""

    def test_is_exception(self) -> None:
        assert issubclass(GuillotineError, Exception)

    def test_message(self) -> None:
        assert str(GuillotineError("boom")) == "boom"

    @pytest.mark.parametrize(
        "cls",
        [
            IncompatibleMethodError,
            InstanceFormatError,
            InstanceValidationError,
            ModelBuildError,
            PartitionValidationError,
            ProblemSizeError,
            SameLayerSwapError,
            UnknownVariableError,
        ],
    )
    def test_every_error_is_a_guillotine_error(self, cls: type[Exception]) -> None:
        assert issubclass(cls, GuillotineError)


class TestPartitionValidationError:
    def test_message_uses_one_based_index(self) -> None:
        err = PartitionValidationError(index=2, reason="missing")
        assert str(err) == "Invalid partition: rectangle 3 is missing"
        assert (err.index, err.reason) == (2, "missing")

    def test_message_without_index(self) -> None:
        err = PartitionValidationError(index=None, reason="empty-layer")
        assert str(err) == "Invalid partition: empty-layer"

    def test_raised_on_duplicate(self) -> None:
        with pytest.raises(PartitionValidationError) as info:
            Partition.from_one_based([[1, 2], [2, 3]]).validate(3)
        assert info.value.reason == "duplicate"


class TestInstanceFormatError:
    def test_code_and_detail(self) -> None:
        err = InstanceFormatError(code="bad-number", detail="'x'")
        assert err.code == "bad-number"
        assert str(err) == "bad-number: 'x'"

    def test_code_only(self) -> None:
        assert str(InstanceFormatError(code="malformed-json")) == "malformed-json"


class TestInstanceValidationError:
    def test_area_sum_mismatch(self) -> None:
        with pytest.raises(InstanceValidationError):
            Instance.create(L1=2, L2=2, areas=[1, 1])


class TestAttributeErrors:
    def test_same_layer_swap(self) -> None:
        err = SameLayerSwapError(i=0, j=1)
        assert (err.i, err.j) == (0, 1)
        assert "1 and 2" in str(err)

    def test_problem_size(self) -> None:
        err = ProblemSizeError(what="brute_force", size=14, limit=12)
        assert (err.what, err.size, err.limit) == ("brute_force", 14, 12)
        assert "14" in str(err) and "12" in str(err)

    def test_unknown_variable(self) -> None:
        err = UnknownVariableError(name="z_9")
        assert err.name == "z_9"
        assert "'z_9'" in str(err)

    def test_incompatible_method(self) -> None:
        err = IncompatibleMethodError(objective="aspect", method="clws", supported=["bb"])
        assert err.supported == ["bb"]
        assert "'clws'" in str(err) and "'aspect'" in str(err)
