"""Per-frame drawable scenes.

Each frame has a persistent layer (fixed circle, its center, the grid),
identical across the animation, and a dynamic layer holding the moving
parts drawn over it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .core import (
    Point2,
    TrochoidParams,
    initial_layout,
    sample_angles,
    t1,
    t2,
    compose,
    trace,
)

DEFAULT_LINE_BP = 0.5
CURVE_LINE_BP = 1.0
DOT_RADIUS_CM = 0.06
LABEL_OFFSET_CM = 0.15
GRID_MARGIN_CM = 1.0


class StyleId(enum.Enum):
    BIG_CIRCLE = "BigCircle"
    LITTLE_CIRCLE = "LittleCircle"
    CURVE = "Curve"
    NEUTRAL = "Neutral"

    @property
    def rgb(self) -> tuple[int, int, int]:
        return STYLE_COLORS[self]


STYLE_COLORS = {
    StyleId.BIG_CIRCLE: (0, 0, 255),       # blue
    StyleId.LITTLE_CIRCLE: (0, 128, 0),    # deepgreen
    StyleId.CURVE: (255, 0, 0),            # red
    StyleId.NEUTRAL: (0, 0, 0),
}
GRID_COLOR = (230, 230, 230)
AXIS_COLOR = (128, 128, 128)


def _check_label(label):
    if label is not None and not label:
        raise ValueError("label must be nonempty when present")


@dataclass(frozen=True)
class CirclePrim:
    center: Point2
    radius: float
    style: StyleId = StyleId.NEUTRAL

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"circle radius must be > 0, got {self.radius}")


@dataclass(frozen=True)
class SegmentPrim:
    a: Point2
    b: Point2
    label: Optional[str] = None
    style: StyleId = StyleId.NEUTRAL

    def __post_init__(self):
        _check_label(self.label)


@dataclass(frozen=True)
class PolylinePrim:
    points: tuple[Point2, ...]
    width: float = CURVE_LINE_BP
    style: StyleId = StyleId.CURVE

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise ValueError("polyline needs at least one point")


@dataclass(frozen=True)
class DotPrim:
    p: Point2
    label: Optional[str] = None
    style: StyleId = StyleId.NEUTRAL

    def __post_init__(self):
        _check_label(self.label)


@dataclass(frozen=True)
class GridPrim:
    """Square grid over ``lo``..``hi`` with axes through ``origin``."""

    spacing: float
    lo: Point2
    hi: Point2
    origin: Point2

    def __post_init__(self):
        if not self.spacing > 0:
            raise ValueError("grid spacing must be > 0")

    def lines(self) -> tuple[list[float], list[float]]:
        """x positions of vertical lines and y positions of horizontal ones."""
        def ticks(o, lo, hi):
            first = -int((o - lo) // self.spacing)
            last = int((hi - o) // self.spacing)
            return [o + i * self.spacing for i in range(first, last + 1)]
        return (ticks(self.origin.x, self.lo.x, self.hi.x),
                ticks(self.origin.y, self.lo.y, self.hi.y))


Primitive = Union[CirclePrim, SegmentPrim, PolylinePrim, DotPrim, GridPrim]


@dataclass(frozen=True)
class FrameScene:
    persistent: tuple[Primitive, ...]
    dynamic: tuple[Primitive, ...]
    index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "persistent", tuple(self.persistent))
        object.__setattr__(self, "dynamic", tuple(self.dynamic))
        if self.index < 0:
            raise ValueError("frame index must be >= 0")

    @property
    def primitives(self) -> tuple[Primitive, ...]:
        return self.persistent + self.dynamic


def sign_string(sign: int) -> str:
    return "+" if sign > 0 else "-"


def build_static(p: TrochoidParams) -> list[Primitive]:
    margin = p.R + GRID_MARGIN_CM
    return [
        CirclePrim(p.O_R, p.R, StyleId.BIG_CIRCLE),
        DotPrim(p.O_R, None, StyleId.BIG_CIRCLE),
        GridPrim(1.0,
                 Point2(p.O_R.x - margin, p.O_R.y - margin),
                 Point2(p.O_R.x + margin, p.O_R.y + margin),
                 p.O_R),
    ]


def build_frame(p: TrochoidParams, frame_index: int, path_prefix,
                persistent=None) -> FrameScene:
    if not path_prefix:
        raise ValueError("path_prefix must hold at least one point")
    phi = sample_angles(p.turns, p.N)[frame_index]
    O_r, P0, Q = initial_layout(p)
    orbit = t1(phi, p.O_R)
    T = compose(orbit, t2(phi, p.sign, p.k, O_r))
    P, center = T(P0), T(O_r)
    dynamic = [
        PolylinePrim(tuple(path_prefix), CURVE_LINE_BP, StyleId.CURVE),
        DotPrim(P, "P"),
        SegmentPrim(p.O_R, center, "R" + sign_string(p.sign) + "r"),
        SegmentPrim(center, P, "d"),
        CirclePrim(center, p.r, StyleId.LITTLE_CIRCLE),
        DotPrim(center, None, StyleId.LITTLE_CIRCLE),
        DotPrim(orbit(Q), None, StyleId.LITTLE_CIRCLE),
    ]
    if persistent is None:
        persistent = build_static(p)
    return FrameScene(tuple(persistent), tuple(dynamic), frame_index)


def build_animation(p: TrochoidParams) -> list[FrameScene]:
    points = trace(p)
    persistent = tuple(build_static(p))
    return [build_frame(p, i, points[: i + 1], persistent) for i in range(len(points))]


def _extent(prim: Primitive) -> tuple[float, float, float, float]:
    if isinstance(prim, CirclePrim):
        c, r = prim.center, prim.radius
        return c.x - r, c.y - r, c.x + r, c.y + r
    if isinstance(prim, GridPrim):
        return prim.lo.x, prim.lo.y, prim.hi.x, prim.hi.y
    if isinstance(prim, SegmentPrim):
        pts = [prim.a, prim.b]
    elif isinstance(prim, PolylinePrim):
        pts = list(prim.points)
    else:
        pts = [prim.p]
    xs = [q.x for q in pts]
    ys = [q.y for q in pts]
    return min(xs), min(ys), max(xs), max(ys)


def view_center(scene: FrameScene) -> Point2:
    """Center of the canvas: the persistent layer's bounding box, else all content.

    Anchoring on the persistent layer keeps the view fixed across frames.
    """
    prims = scene.persistent or scene.dynamic
    if not prims:
        return Point2(0.0, 0.0)
    boxes = [_extent(q) for q in prims]
    x0 = min(b[0] for b in boxes)
    y0 = min(b[1] for b in boxes)
    x1 = max(b[2] for b in boxes)
    y1 = max(b[3] for b in boxes)
    return Point2((x0 + x1) / 2, (y0 + y1) / 2)
