"""Tests for the shape of the three models."""

from __future__ import annotations

import pytest

from guillotine_layout.core import Instance
from guillotine_layout.mip import (
    DECISION_BIG_M_NOTE,
    H_LOWER_BOUND_NOTE,
    build_aspect_decision_model,
    build_aspect_reform_model,
    build_peri_max_model,
    model_summary,
)


def _peri_max_families(n: int, with_cuts: bool) -> dict[str, int]:
    counts = {
        "perimeter": n * n,
        "assign": n,
        "used": n,
        "open": n * n,
        "fill": n,
        "width_cap": n * n,
        "height_cap": n * n,
        "height_le": n * n * (n - 1),
        "height_ge": n * n * (n - 1),
    }
    if with_cuts:
        counts["layer_order"] = n - 1
        counts["triangular"] = n * (n - 1) // 2
    return counts


class TestPeriMaxModel:
    """Row counts per family, variables and objective."""

    def test_micro_with_cuts(self, micro_instance: Instance) -> None:
        model = build_peri_max_model(micro_instance, with_cuts=True)
        assert len(model.variables) == 22
        assert len(model.constraints) == 86
        assert model.families() == _peri_max_families(3, True)

    @pytest.mark.parametrize("n", [1, 2, 4, 5])
    @pytest.mark.parametrize("with_cuts", [False, True])
    def test_family_counts(
        self, instance_factory, n: int, with_cuts: bool  # noqa: ANN001
    ) -> None:
        inst = instance_factory(areas=[1] * n, L1=n, L2=1)
        model = build_peri_max_model(inst, with_cuts=with_cuts)
        expected = {k: v for k, v in _peri_max_families(n, with_cuts).items() if v}
        assert {k: v for k, v in model.families().items() if v} == expected

    def test_binaries_and_objective(self, micro_instance: Instance) -> None:
        model = build_peri_max_model(micro_instance)
        summary = model_summary(model)
        assert summary.binaries == 12
        assert summary.variables == 22
        assert model.objective == ((1, "phi"),)
        assert summary.to_dict()["families"]["perimeter"] == 9

    def test_big_m(self, micro_instance: Instance) -> None:
        row = next(r for r in build_peri_max_model(micro_instance).constraints)
        assert row.name == "perimeter_1_1"
        assert row.rhs == 8
        assert dict((v, c) for c, v in row.terms)["x_1_1"] == 8 + 1


class TestAspectReformModel:
    def test_deviation_variables(self, micro_instance: Instance) -> None:
        model = build_aspect_reform_model(micro_instance)
        names = [v.name for v in model.variables]
        assert sum(1 for name in names if name.startswith("d_")) == 9
        assert len(names) == 9 + 9 + 3 + 9 + 1

    def test_families(self, micro_instance: Instance) -> None:
        families = build_aspect_reform_model(micro_instance).families()
        assert families["dev_width"] == families["dev_height"] == families["ratio"] == 9
        assert "perimeter" not in families

    def test_ratio_coefficient_is_float(self, micro_instance: Instance) -> None:
        model = build_aspect_reform_model(micro_instance)
        row = next(r for r in model.constraints if r.name == "ratio_3_1")
        coefficient = dict((v, c) for c, v in row.terms)["d_3_1"]
        assert coefficient == pytest.approx(-(2**-0.5))


class TestAspectDecisionModel:
    def test_shape(self, micro_instance: Instance) -> None:
        model = build_aspect_decision_model(micro_instance, 2)
        families = model.families()
        assert families["height_def"] == 3
        assert families["width_ratio"] == families["height_ratio"] == 9
        assert model.objective == ()
        assert model.notes == [H_LOWER_BOUND_NOTE, DECISION_BIG_M_NOTE]

    def test_rejects_phi_below_one(self, micro_instance: Instance) -> None:
        with pytest.raises(ValueError, match=">= 1"):
            build_aspect_decision_model(micro_instance, 0.9)

    def test_height_lower_bound_zero(self, micro_instance: Instance) -> None:
        model = build_aspect_decision_model(micro_instance, 2)
        assert model.variable("h_1").lower == 0
        assert model.variable("h_1").upper is None
