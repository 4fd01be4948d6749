"""guillotine-layout testing utilities: fixtures, isolation and assertions.

- **Fixtures**: ``solver_config``, ``isolated_solver_state``,
  ``micro_instance``, ``instance_factory``.
- **Assertions**: ``assert_layout_valid``, ``assert_partition_optimal``,
  ``assert_no_violations``.

Example::

    from guillotine_layout.testing import assert_partition_optimal

    def test_bb_is_optimal(micro_instance):
        best, _ = solve_peri_max_bb(micro_instance)
        assert_partition_optimal(micro_instance, best, ObjectiveKind.PERI_MAX)
"""

from guillotine_layout.testing._assertions import (
    assert_layout_valid,
    assert_no_violations,
    assert_partition_optimal,
)
from guillotine_layout.testing._fixtures import (
    instance_factory,
    isolated_solver_state,
    micro_instance,
    solver_config,
)
from guillotine_layout.testing._isolation import isolated_config

__all__ = [
    "assert_layout_valid",
    "assert_no_violations",
    "assert_partition_optimal",
    "instance_factory",
    "isolated_config",
    "isolated_solver_state",
    "micro_instance",
    "solver_config",
]
