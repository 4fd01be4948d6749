"""guillotine-layout: split a rectangle into soft rectangles with two-stage guillotine cuts.

Horizontal cuts make full-width layers, vertical cuts split each layer
into rectangles of prescribed areas. Exact solvers minimize the perimeter
sum, the largest perimeter or the largest aspect ratio.

Example::

    from guillotine_layout import Instance, solve_peri_sum, solve_peri_max_bb

    inst = Instance.create(L1=2, L2=2, areas=[1, 1, 2])
    partition, value = solve_peri_sum(inst)      # [[1, 2], [3]], 14
    best, stats = solve_peri_max_bb(inst)        # stats.bound_ub == 17/3
"""

from guillotine_layout._version import __version__
from guillotine_layout.clws import solve_clws_fast, solve_clws_quadratic, solve_peri_sum
from guillotine_layout.config._config import SolverConfig, configure, get_global_config
from guillotine_layout.core import (
    Instance,
    Layout,
    ObjectiveKind,
    Partition,
    canonicalize,
    evaluate,
    realize,
    swap_delta,
)
from guillotine_layout.exact import (
    INFEASIBLE,
    SearchStats,
    brute_force,
    feasibility_decision,
    solve_aspect_binary_search,
    solve_aspect_exact_bb,
    solve_peri_max_bb,
)
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
from guillotine_layout.instances import GeneratorConfig, generate, read_instance, write_instance
from guillotine_layout.mip import (
    build_aspect_decision_model,
    build_aspect_reform_model,
    build_peri_max_model,
    check_solution,
    emit_lp,
    encode_partition,
)
from guillotine_layout.report import cross_eval, render_svg, run_bench

__all__ = [
    "INFEASIBLE",
    "__version__",
    "GeneratorConfig",
    "GuillotineError",
    "IncompatibleMethodError",
    "Instance",
    "InstanceFormatError",
    "InstanceValidationError",
    "Layout",
    "ModelBuildError",
    "ObjectiveKind",
    "Partition",
    "PartitionValidationError",
    "ProblemSizeError",
    "SameLayerSwapError",
    "SearchStats",
    "SolverConfig",
    "UnknownVariableError",
    "brute_force",
    "build_aspect_decision_model",
    "build_aspect_reform_model",
    "build_peri_max_model",
    "canonicalize",
    "check_solution",
    "configure",
    "cross_eval",
    "emit_lp",
    "encode_partition",
    "evaluate",
    "feasibility_decision",
    "generate",
    "get_global_config",
    "read_instance",
    "realize",
    "render_svg",
    "run_bench",
    "solve_aspect_binary_search",
    "solve_aspect_exact_bb",
    "solve_clws_fast",
    "solve_clws_quadratic",
    "solve_peri_max_bb",
    "solve_peri_sum",
    "swap_delta",
    "write_instance",
]
