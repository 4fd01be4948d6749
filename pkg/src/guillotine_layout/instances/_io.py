"""Instance and 2-Partition JSON files."""

from __future__ import annotations

import json
import os
import tempfile
from collections.abc import Mapping
from fractions import Fraction
from pathlib import Path
from typing import Any

from guillotine_layout.core import Instance, parse_rational
from guillotine_layout.exceptions import InstanceFormatError
from guillotine_layout.instances._reductions import TwoPartitionInstance

__all__ = [
    "FORMAT_VERSION",
    "atomic_write_text",
    "instance_from_dict",
    "read_instance",
    "read_json_document",
    "read_two_partition",
    "write_instance",
    "write_two_partition",
]

FORMAT_VERSION = 1


def _number(doc: Mapping[str, Any], key: str, value: Any) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InstanceFormatError(code="bad-number", detail=f"{key}: {value!r}")
    try:
        return parse_rational(value)
    except ZeroDivisionError:
        raise InstanceFormatError(code="zero-denominator", detail=f"{key}: {value!r}") from None
    except ValueError:
        raise InstanceFormatError(code="bad-number", detail=f"{key}: {value!r}") from None


def instance_from_dict(doc: Any) -> Instance:
    """Validate a decoded instance document and build the ``Instance``.

    Raises:
        InstanceFormatError: With a code naming the first problem found.
    """
    if not isinstance(doc, dict):
        raise InstanceFormatError(code="malformed-json", detail="top level must be an object")
    for key in ("L1", "L2", "areas"):
        if key not in doc:
            raise InstanceFormatError(code="missing-field", detail=key)
    version = doc.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise InstanceFormatError(code="unsupported-version", detail=repr(version))
    raw_areas = doc["areas"]
    if not isinstance(raw_areas, list) or not raw_areas:
        raise InstanceFormatError(code="missing-field", detail="areas must be a non-empty list")
    L1 = _number(doc, "L1", doc["L1"])
    L2 = _number(doc, "L2", doc["L2"])
    areas = [_number(doc, f"areas[{i}]", a) for i, a in enumerate(raw_areas, start=1)]
    for i, area in enumerate(areas, start=1):
        if area <= 0:
            raise InstanceFormatError(code="non-positive-area", detail=f"areas[{i}] = {area}")
    if L1 <= 0 or L2 <= 0:
        raise InstanceFormatError(code="non-positive-area", detail=f"L1={L1}, L2={L2}")
    total = sum(areas, Fraction(0))
    if total != L1 * L2:
        raise InstanceFormatError(
            code="area-sum-mismatch", detail=f"areas sum to {total}, L1 * L2 = {L1 * L2}"
        )
    raw_meta = doc.get("meta") or {}
    if not isinstance(raw_meta, dict):
        raise InstanceFormatError(code="malformed-json", detail="meta must be an object")
    meta = {str(k): str(v) for k, v in raw_meta.items()}
    return Instance.create(L1=L1, L2=L2, areas=areas, name=str(doc.get("name", "")), meta=meta)


def atomic_write_text(path: str | os.PathLike[str], text: str) -> None:
    """Write *text* to a temporary sibling file, then rename it over *path*."""
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def read_json_document(path: str | os.PathLike[str]) -> Any:
    """Parse a UTF-8 JSON file.

    Raises:
        InstanceFormatError: ``malformed-json`` on invalid UTF-8 or invalid JSON.
        OSError: If the file cannot be read.
    """
    raw = Path(path).read_bytes()
    try:
        return json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise InstanceFormatError(code="malformed-json", detail=f"not UTF-8: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(code="malformed-json", detail=str(exc)) from None


def read_instance(path: str | os.PathLike[str]) -> Instance:
    """Load an instance file.

    Raises:
        InstanceFormatError: ``malformed-json``, ``missing-field``,
            ``unsupported-version``, ``bad-number``, ``zero-denominator``,
            ``non-positive-area`` or ``area-sum-mismatch``.
        OSError: If the file cannot be read.

    Example::

        write_instance(inst, "micro.json")
        assert read_instance("micro.json") == inst
    """
    return instance_from_dict(read_json_document(path))


def write_instance(instance: Instance, path: str | os.PathLike[str]) -> None:
    """Write *instance* as JSON (numbers as ``"p"`` / ``"p/q"`` strings), atomically."""
    atomic_write_text(path, json.dumps(instance.to_dict(), indent=2) + "\n")


def read_two_partition(path: str | os.PathLike[str]) -> TwoPartitionInstance:
    """Load a 2-Partition file: a JSON array of positive integers.

    Raises:
        InstanceFormatError: ``malformed-json`` or ``bad-number``.
    """
    doc = read_json_document(path)
    if not isinstance(doc, list) or not doc:
        raise InstanceFormatError(code="malformed-json", detail="expected a non-empty array")
    values: list[int] = []
    for item in doc:
        if isinstance(item, bool) or not isinstance(item, int) or item < 1:
            raise InstanceFormatError(code="bad-number", detail=repr(item))
        values.append(item)
    return TwoPartitionInstance.of(values)


def write_two_partition(tp: TwoPartitionInstance, path: str | os.PathLike[str]) -> None:
    atomic_write_text(path, json.dumps(list(tp.c)) + "\n")
