"""Seeded random instances in three area classes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import get_args

import numpy as np

from guillotine_layout._logging import log_generator_fallback
from guillotine_layout._types import GeneratorClass
from guillotine_layout.core import Instance
from guillotine_layout.exceptions import InstanceValidationError

__all__ = ["MAX_AREA", "PRNG_NAME", "GeneratorConfig", "generate", "sample_areas"]

PRNG_NAME = "numpy.PCG64"
MAX_AREA = 200
_L1_REDRAWS = 16

# (low, high) inclusive ranges of the MU mixture
_MU_RANGES = ((1, 10), (11, 50), (51, 150))
# (mean, standard deviation) of the MN mixture
_MN_COMPONENTS = ((5.0, 2.0), (25.0, 10.0), (125.0, 50.0))


@dataclass(frozen=True, slots=True)
class GeneratorConfig:
    """Recipe of one random instance.

    Attributes:
        instance_class: ``"U"`` (uniform on 1..200), ``"MU"`` (mixture of
            three uniform ranges) or ``"MN"`` (mixture of three normals).
        n: Number of rectangles.
        seed: Unsigned 64-bit seed of the PCG64 generator.

    Example::

        inst = generate(GeneratorConfig(instance_class="MN", n=10, seed=7))
    """

    instance_class: GeneratorClass
    n: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.instance_class not in get_args(GeneratorClass):
            raise ValueError(f"Unknown instance class {self.instance_class!r}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    @property
    def name(self) -> str:
        return f"{self.instance_class}-n{self.n}-s{self.seed}"


def _draw_area(rng: np.random.Generator, instance_class: GeneratorClass) -> int:
    if instance_class == "U":
        return int(rng.integers(1, MAX_AREA + 1))
    component = int(rng.integers(0, 3))
    if instance_class == "MU":
        low, high = _MU_RANGES[component]
        return int(rng.integers(low, high + 1))
    mean, sigma = _MN_COMPONENTS[component]
    while True:
        value = math.floor(float(rng.normal(mean, sigma)) + 0.5)
        if 1 <= value <= MAX_AREA:
            return value


def sample_areas(rng: np.random.Generator, instance_class: GeneratorClass, n: int) -> list[int]:
    """Draw *n* integer areas of *instance_class* before the side fitting."""
    return [_draw_area(rng, instance_class) for _ in range(n)]


def _side_range(total: int) -> tuple[int, int]:
    # L1 in [ceil(sqrt(A / 3)), floor(sqrt(3 A))]
    low = math.isqrt(total // 3)
    while 3 * low * low < total:
        low += 1
    return max(low, 1), math.isqrt(3 * total)


def _round_robin(areas: list[int], excess: int) -> None:
    while excess:
        progressed = False
        for i, area in enumerate(areas):
            if excess and area >= 2:
                areas[i] -= 1
                excess -= 1
                progressed = True
        if not progressed:
            raise InstanceValidationError("Cannot shrink areas to the fitted rectangle")


def generate(config: GeneratorConfig) -> Instance:
    """Draw a random instance whose areas fill an integer ``L1 x L2`` exactly.

    Areas are sampled by class; with ``A`` their sum, ``L1`` is uniform on
    ``[ceil(sqrt(A / 3)), floor(sqrt(3 A))]`` and ``L2 = A // L1``. Then
    ``A - L1 * L2`` distinct rectangles of area at least 2 lose one unit.

    When too few rectangles can shrink, ``L1`` is redrawn a bounded number
    of times, then the units are taken in round-robin passes; the fallback
    is logged and recorded in ``meta["fallback"]``.

    Raises:
        InstanceValidationError: If no side length leaves room for ``n``
            rectangles of area at least 1.
    """
    rng = np.random.Generator(np.random.PCG64(config.seed))
    areas = sample_areas(rng, config.instance_class, config.n)
    total = sum(areas)
    low, high = _side_range(total)
    eligible = [i for i, a in enumerate(areas) if a >= 2]

    fallback = "none"
    L1 = int(rng.integers(low, high + 1))
    for attempt in range(1, _L1_REDRAWS + 1):
        if total - (total // L1) * L1 <= len(eligible):
            break
        fallback = f"redraw:{attempt}"
        L1 = int(rng.integers(low, high + 1))
    excess = total - (total // L1) * L1

    if excess <= len(eligible):
        chosen = rng.choice(len(eligible), size=excess, replace=False) if excess else []
        for position in chosen:
            areas[eligible[int(position)]] -= 1
    else:
        if (total // L1) * L1 < config.n:
            L1 = min(range(low, high + 1), key=lambda side: (total % side, side))
            excess = total % L1
            fallback = "min-excess"
            if total - excess < config.n:
                raise InstanceValidationError(
                    f"No side length in [{low}, {high}] fits {config.n} rectangles"
                )
        else:
            fallback = "round-robin"
        _round_robin(areas, excess)
    if fallback != "none":
        log_generator_fallback(instance_name=config.name, detail=fallback)

    L2 = total // L1
    return Instance.create(
        L1=L1,
        L2=L2,
        areas=areas,
        name=config.name,
        meta={
            "class": config.instance_class,
            "n": str(config.n),
            "seed": str(config.seed),
            "prng": PRNG_NAME,
            "fallback": fallback,
        },
    )
