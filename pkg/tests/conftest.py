"""Shared test fixtures for guillotine-layout tests."""

from __future__ import annotations

from fractions import Fraction

import pytest

from guillotine_layout.config._config import _reset_global_config
from guillotine_layout.core import Instance
from guillotine_layout.instances import GeneratorConfig, TwoPartitionInstance, generate
from guillotine_layout.testing._fixtures import (  # noqa: F401
    instance_factory,
    isolated_solver_state,
    micro_instance,
    solver_config,
)

# ---------------------------------------------------------------------------
# Known optima of the 2 x 2 square with areas 1, 1, 2
# ---------------------------------------------------------------------------

MICRO_PERI_SUM = Fraction(14)
MICRO_PERI_MAX = Fraction(17, 3)
MICRO_ASPECT = Fraction(2)


@pytest.fixture(autouse=True)
def _clean_global_config():
    """Every test starts and ends with the default global config."""
    _reset_global_config()
    yield
    _reset_global_config()


@pytest.fixture()
def single_instance() -> Instance:
    """One rectangle filling the whole 3 x 2 field."""
    return Instance.create(L1=3, L2=2, areas=[6], name="single")


@pytest.fixture()
def rational_instance() -> Instance:
    """Non-integer sides and areas."""
    return Instance.create(
        L1="3/2", L2="4/3", areas=["1/2", "1/2", "1/3", "2/3"], name="rational"
    )


@pytest.fixture(scope="session")
def small_instances() -> list[Instance]:
    """Deterministic generated instances with 3 to 7 rectangles, all classes."""
    return [
        generate(GeneratorConfig(cls, n, seed))
        for cls in ("U", "MU", "MN")
        for n in (3, 5, 7)
        for seed in (1, 2)
    ]


@pytest.fixture()
def yes_two_partition() -> TwoPartitionInstance:
    return TwoPartitionInstance.of([1, 1, 2])


@pytest.fixture()
def no_two_partition() -> TwoPartitionInstance:
    return TwoPartitionInstance.of([1, 1, 1])
