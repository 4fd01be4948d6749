"""Benchmark fixtures: generated instances at a few sizes."""

from __future__ import annotations

import pytest

from guillotine_layout.core import Instance
from guillotine_layout.instances import GeneratorConfig, generate


@pytest.fixture(scope="module")
def large_instance() -> Instance:
    """300 rectangles: only the perimeter-sum solver is practical here."""
    return generate(GeneratorConfig("U", 300, 11))


@pytest.fixture(scope="module")
def medium_instance() -> Instance:
    return generate(GeneratorConfig("MU", 7, 5))


@pytest.fixture(scope="module")
def small_instance() -> Instance:
    return generate(GeneratorConfig("MN", 6, 2))
