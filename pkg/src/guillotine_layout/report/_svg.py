"""SVG drawing of a layout: layer 0 at the bottom, members left to right."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from guillotine_layout.core import Layout, format_rational

__all__ = ["render_svg"]

SVG_NS = "http://www.w3.org/2000/svg"
_PALETTE = ("#dbe9f6", "#fde2c8", "#d9f0d3", "#f3d6e9", "#fff3bf", "#e0e0f0")


def _px(value: Fraction | float) -> str:
    text = f"{float(value):.3f}".rstrip("0").rstrip(".")
    return text or "0"


def render_svg(layout: Layout, *, width: int = 480, labels: bool = True) -> str:
    """Return SVG 1.1 text for *layout*.

    ``L1`` maps to *width* pixels and ``L2`` scales with it. The document
    holds one ``outer`` rectangle, one ``cell`` rectangle per soft
    rectangle, a ``hcut`` line between consecutive layers and a ``vcut``
    line between neighbours inside a layer. Layers stack upwards from the
    bottom edge in partition order, matching ``Partition``. With *labels*, each cell shows
    its 1-based index and area.

    Output is byte-deterministic for a given layout and options.

    Raises:
        ValueError: If *width* is not positive.

    Example::

        svg = render_svg(realize(inst, best), width=300)
        Path("best.svg").write_text(svg)
    """
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    instance = layout.instance
    scale = Fraction(width) / instance.L1
    total_width = instance.L1 * scale
    total_height = instance.L2 * scale

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": _px(total_width),
            "height": _px(total_height),
            "viewBox": f"0 0 {_px(total_width)} {_px(total_height)}",
        },
    )
    title = ET.SubElement(root, "title")
    title.text = instance.name or "layout"
    cells = ET.SubElement(root, "g", {"class": "cells"})
    cuts = ET.SubElement(root, "g", {"class": "cuts", "stroke": "#333", "stroke-width": "1"})
    text_group = ET.SubElement(root, "g", {"class": "labels"}) if labels else None

    bottom = total_height
    for k, layer in enumerate(layout.partition.layers):
        height = layout.layer_heights[k] * scale
        top = bottom - height
        if k > 0:
            y = _px(bottom)
            ET.SubElement(
                cuts,
                "line",
                {"class": "hcut", "x1": "0", "y1": y, "x2": _px(total_width), "y2": y},
            )
        left = Fraction(0)
        for position, index in enumerate(layer):
            cell_width = layout.rects[index].width * scale
            if position > 0:
                ET.SubElement(
                    cuts,
                    "line",
                    {
                        "class": "vcut",
                        "x1": _px(left),
                        "y1": _px(top),
                        "x2": _px(left),
                        "y2": _px(top + height),
                    },
                )
            ET.SubElement(
                cells,
                "rect",
                {
                    "class": "cell",
                    "data-index": str(index + 1),
                    "x": _px(left),
                    "y": _px(top),
                    "width": _px(cell_width),
                    "height": _px(height),
                    "fill": _PALETTE[k % len(_PALETTE)],
                },
            )
            if text_group is not None:
                label = ET.SubElement(
                    text_group,
                    "text",
                    {
                        "class": "label",
                        "x": _px(left + cell_width / 2),
                        "y": _px(top + height / 2),
                        "text-anchor": "middle",
                        "dominant-baseline": "middle",
                        "font-size": _px(min(Fraction(12), height / 3, cell_width / 3)),
                    },
                )
                area = format_rational(instance.areas[index])
                label.text = f"{index + 1}: {area}"
            left += cell_width
        bottom = top

    ET.SubElement(
        root,
        "rect",
        {
            "class": "outer",
            "x": "0",
            "y": "0",
            "width": _px(total_width),
            "height": _px(total_height),
            "fill": "none",
            "stroke": "#000",
            "stroke-width": "2",
        },
    )
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
