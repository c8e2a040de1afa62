"""ASCII, SVG and JSON pictures of regions and tilings.

This is the only module that uses floating point: hex cells are drawn at
their Cartesian positions.  Tilings are passed as a list of tiles, each a set
of cells or boxes, optionally with a kind per tile for coloring.
"""
from __future__ import annotations

import json
import math
import string
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .hexgrid import HexCell, HexKind, HexRegion
from .transfer import SquareBox, SquareKind, SquareRegion

__all__ = ["RenderSpec", "DEFAULT_PALETTE", "render", "ascii_picture", "svg_picture", "json_picture"]

DEFAULT_PALETTE = {
    "RS": "#e8a33d", "mountain": "#e8a33d",
    "LS": "#4f86c6", "valley": "#4f86c6",
    "VB": "#9b6bbf", "split": "#9b6bbf",
    "RB": "#6aaa64", "negative": "#6aaa64",
    "FB": "#d9534f", "positive": "#d9534f",
    "region": "#d0d0d0", "ribbon": "#c9b27c",
}

_KIND_CHAR = {
    "RS": "R", "mountain": "M", "LS": "L", "valley": "V", "VB": "|",
    "split": "|", "RB": "/", "negative": "\\", "FB": "\\", "positive": "/",
}


@dataclass
class RenderSpec:
    format: str = "ascii"
    scale: float = 12.0
    palette: dict = field(default_factory=lambda: dict(DEFAULT_PALETTE))
    green: tuple[int, int] | None = None   # (k, j): shade columns r = j mod k
    red: dict | None = None                # box -> band index; draw borders between bands

    def __post_init__(self):
        if self.format not in ("svg", "ascii", "json"):
            raise ValueError(f"unknown format {self.format!r}; use svg, ascii or json")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def _kind_name(kind) -> str | None:
    if isinstance(kind, (HexKind, SquareKind)):
        return kind.value
    return kind


def _is_hex(cells: Iterable) -> bool:
    for c in cells:
        return isinstance(c, HexCell)
    return False


def _grid_pos(cell) -> tuple[int, int]:
    if isinstance(cell, HexCell):
        return cell.key
    return (cell.x, cell.y)


def ascii_picture(region: Iterable, tiles: Sequence[Iterable] = (), kinds: Sequence = ()) -> str:
    """One character per cell at its grid position; tiles get letters (or kind symbols)."""
    region = list(region)
    label: dict = {c: "#" for c in region}
    letters = string.ascii_letters + string.digits
    for i, tile in enumerate(tiles):
        kind = _kind_name(kinds[i]) if i < len(kinds) else None
        ch = _KIND_CHAR.get(kind, letters[i % len(letters)]) if kind else letters[i % len(letters)]
        for c in tile:
            label[c] = ch
    if not label:
        return ""
    pos = {_grid_pos(c): ch for c, ch in label.items()}
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = "".join(pos.get((x, y), " ") for x in range(min(xs), max(xs) + 1))
        lines.append(row.rstrip())
    return "\n".join(lines) + "\n"


def _hex_polygon(cell: HexCell, s: float) -> list[tuple[float, float]]:
    pts = []
    for v in cell.vertices():
        pts.append(((v.a - v.b / 2) * s, -(v.b * math.sqrt(3) / 2) * s))
    return pts


def _box_polygon(box: SquareBox, s: float) -> list[tuple[float, float]]:
    x, y = box.x, box.y
    return [((x + dx) * s, -(y + dy) * s) for dx, dy in ((1, 0), (0, 1), (-1, 0), (0, -1))]


def svg_picture(region: Iterable, tiles: Sequence[Iterable] = (), kinds: Sequence = (),
                spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec("svg")
    region = list(region)
    hexes = _is_hex(region)
    poly = _hex_polygon if hexes else _box_polygon
    fill = {c: spec.palette["region"] for c in region}
    for i, tile in enumerate(tiles):
        kind = _kind_name(kinds[i]) if i < len(kinds) else None
        color = spec.palette.get(kind, spec.palette["ribbon"])
        for c in tile:
            fill[c] = color
    points = [p for c in fill for p in poly(c, spec.scale)]
    if not points:
        points = [(0.0, 0.0)]
    pad = spec.scale
    x0 = min(p[0] for p in points) - pad
    y0 = min(p[1] for p in points) - pad
    w = max(p[0] for p in points) + pad - x0
    h = max(p[1] for p in points) + pad - y0
    root = ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                      viewBox=f"{x0:.2f} {y0:.2f} {w:.2f} {h:.2f}",
                      width=f"{w:.0f}", height=f"{h:.0f}")
    if spec.green and not hexes:
        k, j = spec.green
        lo = min(c.x for c in fill) - 1 if fill else 0
        hi = max(c.x for c in fill) + 1 if fill else 0
        for r in range(lo, hi):
            if r % k == j % k:
                ET.SubElement(root, "rect", x=f"{r * spec.scale:.2f}", y=f"{y0:.2f}",
                              width=f"{spec.scale:.2f}", height=f"{h:.2f}",
                              fill="#3cb371", opacity="0.25")
    owner = {}
    for i, tile in enumerate(tiles):
        for c in tile:
            owner[c] = i
    for c, color in sorted(fill.items(), key=lambda kv: _grid_pos(kv[0])):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in poly(c, spec.scale))
        ET.SubElement(root, "polygon", points=pts, fill=color, stroke="#ffffff",
                      **{"stroke-width": f"{spec.scale / 12:.2f}"})
    if spec.red and not hexes:
        for box, band in spec.red.items():
            for nb in (SquareBox(box.x - 1, box.y - 1), SquareBox(box.x + 1, box.y - 1)):
                other = spec.red.get(nb)
                if other is not None and other != band:
                    # shared edge runs between the two boxes' common vertices
                    mx, my = (box.x + nb.x) / 2, (box.y + nb.y) / 2
                    dx, dy = (nb.x - box.x) / 2, (box.y - nb.y) / 2
                    ET.SubElement(root, "line",
                                  x1=f"{(mx - dy) * spec.scale:.2f}", y1=f"{-(my - dx) * spec.scale:.2f}",
                                  x2=f"{(mx + dy) * spec.scale:.2f}", y2=f"{-(my + dx) * spec.scale:.2f}",
                                  stroke="#cc0000", **{"stroke-width": f"{spec.scale / 5:.2f}"})
    return ET.tostring(root, encoding="unicode") + "\n"


def json_picture(region: Iterable, tiles: Sequence[Iterable] = (), kinds: Sequence = ()) -> str:
    region = list(region)
    if _is_hex(region):
        out = HexRegion(region).to_json()
        key = "cells"
    else:
        out = SquareRegion(region).to_json()
        key = "boxes"
    if tiles:
        out["tiles"] = []
        for i, tile in enumerate(tiles):
            entry = {key: sorted(list(_pair(c)) for c in tile)}
            if i < len(kinds) and kinds[i] is not None:
                entry["kind"] = _kind_name(kinds[i])
            out["tiles"].append(entry)
    return json.dumps(out) + "\n"


def _pair(c) -> tuple[int, int]:
    return c.as_pair()


def render(region: Iterable, tiles: Sequence[Iterable] = (), kinds: Sequence = (),
           spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    if spec.format == "ascii":
        return ascii_picture(region, tiles, kinds)
    if spec.format == "json":
        return json_picture(region, tiles, kinds)
    return svg_picture(region, tiles, kinds, spec)
