"""Domain types, exact objective evaluation and partition utilities."""

from guillotine_layout.core._instance import Instance, format_rational, parse_rational
from guillotine_layout.core._layout import Layout, RectGeometry, realize
from guillotine_layout.core._objective import (
    ObjectiveKind,
    aspect_ratio,
    evaluate,
    objective_key,
    peri_sum_of_partition,
    swap,
    swap_delta,
)
from guillotine_layout.core._partition import Partition, canonicalize

__all__ = [
    "Instance",
    "Layout",
    "ObjectiveKind",
    "Partition",
    "RectGeometry",
    "aspect_ratio",
    "canonicalize",
    "evaluate",
    "format_rational",
    "objective_key",
    "parse_rational",
    "peri_sum_of_partition",
    "realize",
    "swap",
    "swap_delta",
]
