"""Sidecar metadata written next to an exported LP file.

``FILE.lp.json`` embeds the instance, the model kind, the cuts flag and the
threshold of a decision model, which is all ``check`` needs to rebuild the
exact model the LP text came from.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, get_args

from guillotine_layout._types import ModelKind
from guillotine_layout.core import Instance, format_rational, parse_rational
from guillotine_layout.exceptions import InstanceFormatError
from guillotine_layout.instances import atomic_write_text, instance_from_dict, read_json_document
from guillotine_layout.mip._builders import (
    build_aspect_decision_model,
    build_aspect_reform_model,
    build_peri_max_model,
)
from guillotine_layout.mip._model import LinearModel

__all__ = [
    "METADATA_VERSION",
    "ModelMetadata",
    "read_metadata",
    "sidecar_path",
    "write_metadata",
]

METADATA_VERSION = 1


@dataclass(frozen=True, slots=True)
class ModelMetadata:
    """Everything needed to rebuild an exported model.

    Attributes:
        instance: The instance the model encodes.
        kind: ``"peri-max"``, ``"aspect-reform"`` or ``"aspect-decision"``.
        with_cuts: Whether the symmetry cuts were added.
        phi: Threshold of the decision model, ``None`` for the others.

    Example::

        meta = ModelMetadata(inst, "aspect-decision", phi=Fraction(2))
        model = meta.build()
    """

    instance: Instance
    kind: ModelKind
    with_cuts: bool = False
    phi: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind not in get_args(ModelKind):
            raise ValueError(f"Unknown model kind {self.kind!r}")
        if (self.kind == "aspect-decision") != (self.phi is not None):
            raise ValueError("phi is required by aspect-decision and only by it")

    def build(self) -> LinearModel:
        if self.kind == "peri-max":
            return build_peri_max_model(self.instance, self.with_cuts)
        if self.kind == "aspect-reform":
            return build_aspect_reform_model(self.instance, self.with_cuts)
        assert self.phi is not None
        return build_aspect_decision_model(self.instance, self.phi, self.with_cuts)

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary."""
        return {
            "version": METADATA_VERSION,
            "model": self.kind,
            "phi": None if self.phi is None else format_rational(self.phi),
            "cuts": self.with_cuts,
            "instance": self.instance.to_dict(),
        }

    @classmethod
    def from_dict(cls, doc: Any) -> ModelMetadata:
        """Inverse of ``to_dict``.

        Raises:
            InstanceFormatError: If the document or its instance is invalid.
        """
        if not isinstance(doc, dict):
            raise InstanceFormatError(code="malformed-json", detail="top level must be an object")
        for key in ("model", "instance"):
            if key not in doc:
                raise InstanceFormatError(code="missing-field", detail=key)
        if doc.get("version", METADATA_VERSION) != METADATA_VERSION:
            raise InstanceFormatError(code="unsupported-version", detail=repr(doc["version"]))
        raw_phi = doc.get("phi")
        try:
            phi = None if raw_phi is None else parse_rational(raw_phi)
        except (ValueError, ZeroDivisionError):
            raise InstanceFormatError(code="bad-number", detail=f"phi: {raw_phi!r}") from None
        try:
            return cls(
                instance=instance_from_dict(doc["instance"]),
                kind=doc["model"],
                with_cuts=bool(doc.get("cuts", False)),
                phi=phi,
            )
        except ValueError as exc:
            raise InstanceFormatError(code="missing-field", detail=str(exc)) from None


def sidecar_path(lp_path: str | os.PathLike[str]) -> Path:
    """``model.lp`` -> ``model.lp.json``."""
    path = Path(lp_path)
    return path.with_name(path.name + ".json")


def write_metadata(metadata: ModelMetadata, path: str | os.PathLike[str]) -> None:
    atomic_write_text(path, json.dumps(metadata.to_dict(), indent=2) + "\n")


def read_metadata(path: str | os.PathLike[str]) -> ModelMetadata:
    """Load a sidecar document written by ``write_metadata``.

    Raises:
        InstanceFormatError: On malformed JSON or an invalid document.
    """
    return ModelMetadata.from_dict(read_json_document(path))
