"""Mixed-integer models of the max-objective problems, LP export and checking."""

from guillotine_layout.mip._builders import (
    DECISION_BIG_M_NOTE,
    H_LOWER_BOUND_NOTE,
    build_aspect_decision_model,
    build_aspect_reform_model,
    build_peri_max_model,
)
from guillotine_layout.mip._lp import emit_lp, format_number
from guillotine_layout.mip._metadata import (
    METADATA_VERSION,
    ModelMetadata,
    read_metadata,
    sidecar_path,
    write_metadata,
)
from guillotine_layout.mip._model import (
    Coefficient,
    Constraint,
    LinearModel,
    Term,
    Variable,
    VariableNaming,
)
from guillotine_layout.mip._solution import (
    DecodedSolution,
    ModelSummary,
    Violation,
    check_solution,
    decode_assignment,
    encode_partition,
    model_summary,
    read_solution,
)

__all__ = [
    "DECISION_BIG_M_NOTE",
    "H_LOWER_BOUND_NOTE",
    "METADATA_VERSION",
    "Coefficient",
    "Constraint",
    "DecodedSolution",
    "LinearModel",
    "ModelMetadata",
    "ModelSummary",
    "Term",
    "Variable",
    "VariableNaming",
    "Violation",
    "build_aspect_decision_model",
    "build_aspect_reform_model",
    "build_peri_max_model",
    "check_solution",
    "decode_assignment",
    "emit_lp",
    "encode_partition",
    "format_number",
    "model_summary",
    "read_metadata",
    "read_solution",
    "sidecar_path",
    "write_metadata",
]
