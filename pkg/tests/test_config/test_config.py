"""Tests for SolverConfig: layered configuration."""

from __future__ import annotations

import pytest

from guillotine_layout.config import SolverConfig, configure, get_global_config, resolve_config
from guillotine_layout.config._config import _reset_global_config, _set_global_config
from guillotine_layout.core import Instance, ObjectiveKind
from guillotine_layout.exact import brute_force
from guillotine_layout.exceptions import ProblemSizeError


class TestSolverConfigDefaults:
    """Default values."""

    def test_defaults(self) -> None:
        config = SolverConfig()
        assert config.brute_force_max_n == 12
        assert config.feasibility_tolerance == 1e-9
        assert config.binary_search_gap == 0.01
        assert config.time_limit is None
        assert config.log_search_progress is False


class TestSolverConfigFrozen:
    def test_cannot_set_fields(self) -> None:
        config = SolverConfig()
        with pytest.raises(AttributeError):
            config.time_limit = 5.0  # type: ignore[misc]


class TestSolverConfigMerge:
    """Merge semantics for layered configuration."""

    def test_merge_overrides_one_field(self) -> None:
        merged = SolverConfig().merge(binary_search_gap=0.001)
        assert merged.binary_search_gap == 0.001
        assert merged.brute_force_max_n == 12  # unchanged

    def test_merge_with_no_overrides(self) -> None:
        config = SolverConfig(poll_interval=7)
        assert config.merge() == config

    def test_none_does_not_override(self) -> None:
        config = SolverConfig(time_limit=3.0)
        assert config.merge(time_limit=None).time_limit == 3.0

    def test_zero_tolerance_is_an_override(self) -> None:
        assert SolverConfig().merge(feasibility_tolerance=0.0).feasibility_tolerance == 0.0

    def test_merge_returns_new_instance(self) -> None:
        config = SolverConfig()
        merged = config.merge(log_search_progress=True)
        assert merged is not config
        assert config.log_search_progress is False

    def test_merge_every_field(self) -> None:
        merged = SolverConfig().merge(
            brute_force_max_n=5,
            feasibility_tolerance=1e-6,
            violation_tolerance=1e-3,
            binary_search_gap=0.5,
            bound_tolerance=1e-8,
            time_limit=2.0,
            poll_interval=16,
            dp_max_sum=500,
            log_search_progress=True,
        )
        assert merged == SolverConfig(5, 1e-6, 1e-3, 0.5, 1e-8, 2.0, 16, 500, True)


class TestSolverConfigValidation:
    @pytest.mark.parametrize(
        ("field", "value"),
        [
            ("brute_force_max_n", 0),
            ("feasibility_tolerance", -1e-9),
            ("violation_tolerance", -1.0),
            ("binary_search_gap", 0.0),
            ("bound_tolerance", 1.0),
            ("time_limit", 0.0),
            ("poll_interval", 0),
            ("dp_max_sum", 0),
        ],
    )
    def test_rejects_out_of_range(self, field: str, value: float) -> None:
        with pytest.raises(ValueError, match=field):
            SolverConfig(**{field: value})  # type: ignore[arg-type]

    def test_merge_validates(self) -> None:
        with pytest.raises(ValueError, match="binary_search_gap"):
            SolverConfig().merge(binary_search_gap=-0.1)


class TestGlobalConfig:
    """Global config get/configure/reset."""

    def test_get_global_config_returns_defaults(self) -> None:
        assert get_global_config() == SolverConfig()

    def test_configure_merges_with_existing(self) -> None:
        configure(brute_force_max_n=9)
        configure(time_limit=1.5)
        config = get_global_config()
        assert config.brute_force_max_n == 9
        assert config.time_limit == 1.5

    def test_configure_returns_new_config(self) -> None:
        result = configure(poll_interval=3)
        assert result is get_global_config()
        assert result.poll_interval == 3

    def test_set_and_reset(self) -> None:
        snapshot = SolverConfig(dp_max_sum=10)
        _set_global_config(snapshot)
        assert get_global_config() is snapshot
        _reset_global_config()
        assert get_global_config() == SolverConfig()

    def test_resolve_prefers_explicit(self) -> None:
        configure(brute_force_max_n=4)
        explicit = SolverConfig(brute_force_max_n=8)
        assert resolve_config(explicit) is explicit
        assert resolve_config(None).brute_force_max_n == 4


class TestConfigLayering:
    """Global settings reach solvers unless a call passes its own config."""

    def test_global_guard_applies(self, micro_instance: Instance) -> None:
        configure(brute_force_max_n=2)
        with pytest.raises(ProblemSizeError) as info:
            brute_force(micro_instance, ObjectiveKind.PERI_SUM)
        assert (info.value.size, info.value.limit) == (3, 2)

    def test_call_site_overrides_global(self, micro_instance: Instance) -> None:
        configure(brute_force_max_n=2)
        call = get_global_config().merge(brute_force_max_n=3)
        _, value = brute_force(micro_instance, ObjectiveKind.PERI_SUM, config=call)
        assert value == 14
