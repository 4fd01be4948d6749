"""Tests for bisection on the aspect-ratio threshold."""

from __future__ import annotations

import logging

import pytest

from guillotine_layout.config import SolverConfig
from guillotine_layout.core import Instance, ObjectiveKind, Partition
from guillotine_layout.exact import (
    BinarySearchTrace,
    brute_force,
    partition_key,
    solve_aspect_binary_search,
)
from guillotine_layout.instances import GeneratorConfig, generate

from ..conftest import MICRO_ASPECT


class TestMicro:
    """Start interval [1, 2] on the micro instance, all midpoints infeasible."""

    def test_trace(self, micro_instance: Instance) -> None:
        partition, value, trace, stats = solve_aspect_binary_search(micro_instance)
        assert len(trace.iterations) == 7
        assert not any(feasible for _, feasible in trace.iterations)
        assert trace.iterations[0][0] == 1.5
        assert trace.phi_low == 1.9921875
        assert trace.phi_up == 2.0
        assert value == MICRO_ASPECT
        assert partition.to_one_based() == [[1, 2], [3]]
        assert stats.status == "Optimal"
        assert stats.bound_lb == 1.9921875

    def test_coarser_gap(self, micro_instance: Instance) -> None:
        config = SolverConfig(binary_search_gap=0.5)
        _, _, trace, _ = solve_aspect_binary_search(micro_instance, config=config)
        # [1, 2] -> [1.5, 2], width 0.5 is not below the gap; [1.75, 2] is
        assert len(trace.iterations) == 2


class TestAccuracy:
    """The incumbent lies within the gap of the true optimum."""

    def test_generated(self, small_instances: list[Instance]) -> None:
        gap = SolverConfig().binary_search_gap
        for inst in small_instances:
            partition, value, trace, stats = solve_aspect_binary_search(inst)
            _, optimum = brute_force(inst, ObjectiveKind.ASPECT_RATIO)
            assert value == partition_key(inst, partition.layers, ObjectiveKind.ASPECT_RATIO)
            assert optimum <= value <= float(optimum) + gap + 1e-6, inst.name
            assert trace.phi_low <= float(optimum) + 1e-6
            assert stats.bound_lb is not None and stats.bound_lb <= value


class TestTimeLimit:
    def test_expired_before_first_step(self) -> None:
        inst = generate(GeneratorConfig("U", 40, 3))
        partition, value, trace, stats = solve_aspect_binary_search(inst, time_limit=1e-9)
        assert stats.status == "TimeLimit"
        assert trace.iterations == []
        assert stats.bound_lb == 1.0
        assert value == partition_key(inst, partition.layers, ObjectiveKind.ASPECT_RATIO)


class TestTrace:
    def test_record_moves_ends(self) -> None:
        start = Partition.from_one_based([[1, 2, 3]])
        better = Partition.from_one_based([[1, 2], [3]])
        trace = BinarySearchTrace(phi_low=1.0, phi_up=4.0, incumbent=start)
        trace.record(2.5, True, better)
        trace.record(1.75, False)
        assert (trace.phi_low, trace.phi_up) == (1.75, 2.5)
        assert trace.incumbent == better
        assert trace.to_dict()["iterations"] == [
            {"phi": 2.5, "feasible": True},
            {"phi": 1.75, "feasible": False},
        ]

    def test_steps_logged(
        self, micro_instance: Instance, caplog: pytest.LogCaptureFixture
    ) -> None:
        with caplog.at_level(logging.DEBUG, logger="guillotine_layout.search.aspect-binsearch"):
            solve_aspect_binary_search(micro_instance)
        steps = [r for r in caplog.records if "infeasible" in r.getMessage()]
        assert len(steps) == 7
