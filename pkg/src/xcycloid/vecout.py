"""Deterministic SVG frames and numbered frame sequences."""

from __future__ import annotations

import os
from pathlib import Path
from xml.sax.saxutils import escape

from .scene import (
    AXIS_COLOR,
    DEFAULT_LINE_BP,
    DOT_RADIUS_CM,
    GRID_COLOR,
    LABEL_OFFSET_CM,
    CirclePrim,
    DotPrim,
    FrameScene,
    GridPrim,
    PolylinePrim,
    SegmentPrim,
    view_center,
)

MAX_FRAMES = 9999
BP_CM = 2.54 / 72
LABEL_FONT_CM = 0.35


class CapacityError(ValueError):
    pass


def fmt(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _hex(rgb) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


class _Canvas:
    def __init__(self, scene: FrameScene, canvas_cm: float):
        self.size = canvas_cm
        self.center = view_center(scene)

    def xy(self, p) -> tuple[str, str]:
        half = self.size / 2
        return fmt(p.x - self.center.x + half), fmt(half - (p.y - self.center.y))


def _text(cv: _Canvas, p, label: str) -> str:
    x, y = cv.xy(type(p)(p.x - LABEL_OFFSET_CM, p.y + LABEL_OFFSET_CM))
    return (f'<text x="{x}" y="{y}" font-size="{fmt(LABEL_FONT_CM)}" '
            f'font-family="serif" text-anchor="end">{escape(label)}</text>')


def _stroke(rgb, width_bp=DEFAULT_LINE_BP) -> str:
    return f'fill="none" stroke="{_hex(rgb)}" stroke-width="{fmt(width_bp * BP_CM)}"'


def _element(cv: _Canvas, prim) -> str:
    if isinstance(prim, CirclePrim):
        x, y = cv.xy(prim.center)
        return (f'<circle class="circle" cx="{x}" cy="{y}" r="{fmt(prim.radius)}" '
                f'{_stroke(prim.style.rgb)}/>')
    if isinstance(prim, DotPrim):
        x, y = cv.xy(prim.p)
        dot = f'<circle class="dot" cx="{x}" cy="{y}" r="{fmt(DOT_RADIUS_CM)}" fill="{_hex(prim.style.rgb)}"/>'
        if prim.label is None:
            return dot
        return f'<g class="dot">{dot}{_text(cv, prim.p, prim.label)}</g>'
    if isinstance(prim, SegmentPrim):
        (x1, y1), (x2, y2) = cv.xy(prim.a), cv.xy(prim.b)
        line = (f'<line class="segment" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'{_stroke(prim.style.rgb)}/>')
        if prim.label is None:
            return line
        mid = type(prim.a)((prim.a.x + prim.b.x) / 2, (prim.a.y + prim.b.y) / 2)
        return f'<g class="segment">{line}{_text(cv, mid, prim.label)}</g>'
    if isinstance(prim, PolylinePrim):
        pts = " ".join(",".join(cv.xy(q)) for q in prim.points)
        return (f'<polyline class="curve" points="{pts}" {_stroke(prim.style.rgb, prim.width)} '
                f'stroke-linejoin="round" stroke-linecap="round"/>')
    if isinstance(prim, GridPrim):
        xs, ys = prim.lines()
        parts = []
        y_lo, y_hi = cv.xy(prim.lo)[1], cv.xy(prim.hi)[1]
        x_lo, x_hi = cv.xy(prim.lo)[0], cv.xy(prim.hi)[0]
        for gx in xs:
            x = cv.xy(type(prim.lo)(gx, 0.0))[0]
            parts.append(f'<line x1="{x}" y1="{y_lo}" x2="{x}" y2="{y_hi}"/>')
        for gy in ys:
            y = cv.xy(type(prim.lo)(0.0, gy))[1]
            parts.append(f'<line x1="{x_lo}" y1="{y}" x2="{x_hi}" y2="{y}"/>')
        ox, oy = cv.xy(prim.origin)
        axes = (f'<g class="axes" {_stroke(AXIS_COLOR)}>'
                f'<line x1="{x_lo}" y1="{oy}" x2="{x_hi}" y2="{oy}"/>'
                f'<line x1="{ox}" y1="{y_lo}" x2="{ox}" y2="{y_hi}"/></g>')
        return (f'<g class="grid" {_stroke(GRID_COLOR)}>' + "".join(parts) + axes + "</g>")
    raise TypeError(f"unknown primitive {prim!r}")


def emit_svg(scene: FrameScene, canvas_cm: float = 10.0, dpi_hint: int = 600) -> str:
    cv = _Canvas(scene, canvas_cm)
    size = fmt(canvas_cm)
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}cm" height="{size}cm" viewBox="0.0000 0.0000 {size} {size}">',
        f"<desc>{escape(f'frame {scene.index}; dpi hint {dpi_hint}')}</desc>",
        f'<rect x="0.0000" y="0.0000" width="{size}" height="{size}" fill="#ffffff"/>',
        '<g id="persistent">',
        *(_element(cv, q) for q in scene.persistent),
        "</g>",
        '<g id="dynamic">',
        *(_element(cv, q) for q in scene.dynamic),
        "</g>",
        "</svg>",
        "",
    ]
    return "\n".join(out)


def frame_name(basename: str, number: int, ext: str) -> str:
    return f"{basename}-{number:04d}.{ext}"


def check_capacity(count: int) -> None:
    if count > MAX_FRAMES:
        raise CapacityError(f"{count} frames exceed the %04d naming limit of {MAX_FRAMES}")


def write_sequence(dir: str | os.PathLike, basename: str, scenes,
                   canvas_cm: float = 10.0, dpi_hint: int = 600) -> list[Path]:
    """Write ``<basename>-0001.svg`` onwards, one file per scene, in order."""
    scenes = list(scenes)
    check_capacity(len(scenes))
    if not scenes:
        return []
    out_dir = Path(dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for number, scene in enumerate(scenes, start=1):
        path = out_dir / frame_name(basename, number, "svg")
        path.write_bytes(emit_svg(scene, canvas_cm, dpi_hint).encode("utf-8"))
        paths.append(path)
    return paths
