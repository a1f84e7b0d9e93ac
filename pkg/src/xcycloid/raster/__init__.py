"""Rasterize frame scenes into RGB pixel buffers and write them as PPM."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..scene import (
    AXIS_COLOR,
    DEFAULT_LINE_BP,
    DOT_RADIUS_CM,
    GRID_COLOR,
    CirclePrim,
    DotPrim,
    FrameScene,
    GridPrim,
    PolylinePrim,
    SegmentPrim,
    view_center,
)
from ..vecout import check_capacity, frame_name
from . import _backend
from ._backend import BACKEND

__all__ = [
    "BACKEND",
    "PixelBuffer",
    "canvas_pixels",
    "pad_even",
    "rasterize",
    "read_ppm",
    "write_ppm",
    "write_ppm_sequence",
]

WHITE = (255, 255, 255)
CIRCLE_STEP_PX = 0.25


@dataclass(frozen=True, eq=False)
class PixelBuffer:
    """Row-major RGB raster; ``pixels`` has shape ``(height, width, 3)``, dtype uint8."""

    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"buffer must be at least 1x1, got {self.width}x{self.height}")
        if self.pixels.shape != (self.height, self.width, 3) or self.pixels.dtype != np.uint8:
            raise ValueError(f"pixels must be uint8 of shape {(self.height, self.width, 3)}")

    @classmethod
    def blank(cls, width: int, height: int, color=WHITE) -> PixelBuffer:
        pixels = np.empty((height, width, 3), np.uint8)
        if color[0] == color[1] == color[2]:
            pixels.reshape(-1)[:] = color[0]
        else:
            pixels[...] = np.asarray(color, np.uint8)
        return cls(width, height, pixels)

    def __eq__(self, other):
        if not isinstance(other, PixelBuffer):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height) and bool(
            np.array_equal(self.pixels, other.pixels))

    def tobytes(self) -> bytes:
        return np.ascontiguousarray(self.pixels).tobytes()


def canvas_pixels(canvas_cm: float, dpi: int) -> int:
    # Round half up, not Python's round-half-even.
    return max(1, math.floor(canvas_cm * dpi / 2.54 + 0.5))


def pen_px(width_bp: float, dpi: int) -> int:
    return max(1, math.ceil(width_bp * dpi / 72 - 1e-9))


def pen_mask(width_px: int) -> tuple[np.ndarray, np.ndarray]:
    """Pixel offsets covered by a round pen ``width_px`` wide."""
    rad = width_px / 2
    reach = math.ceil(rad)
    dy, dx = np.mgrid[-reach:reach + 1, -reach:reach + 1]
    inside = dx * dx + dy * dy <= rad * rad
    return (np.ascontiguousarray(dx[inside], np.int64),
            np.ascontiguousarray(dy[inside], np.int64))


def _clip(x0, y0, x1, y1, lo, hi):
    """Liang-Barsky clip of a segment to the square [lo, hi]^2, or None."""
    t0, t1 = 0.0, 1.0
    dx, dy = x1 - x0, y1 - y0
    for p, q in ((-dx, x0 - lo), (dx, hi - x0), (-dy, y0 - lo), (dy, hi - y0)):
        if p == 0:
            if q < 0:
                return None
            continue
        t = q / p
        if p < 0:
            if t > t1:
                return None
            t0 = max(t0, t)
        else:
            if t < t0:
                return None
            t1 = min(t1, t)
    return x0 + t0 * dx, y0 + t0 * dy, x0 + t1 * dx, y0 + t1 * dy


class _Painter:
    def __init__(self, scene, canvas_cm, dpi, kernels):
        self.side = canvas_pixels(canvas_cm, dpi)
        self.buf = PixelBuffer.blank(self.side, self.side)
        self.scale = dpi / 2.54
        self.dpi = dpi
        self.center = view_center(scene)
        self.k = kernels
        self._masks = {}
        self.thin = self.mask(DEFAULT_LINE_BP)

    def mask(self, width_bp):
        w = pen_px(width_bp, self.dpi)
        if w not in self._masks:
            self._masks[w] = pen_mask(w)
        return self._masks[w]

    def px(self, x, y):
        half = self.side / 2
        return half + (x - self.center.x) * self.scale, half - (y - self.center.y) * self.scale

    def _window(self, mask):
        margin = float(max(abs(mask[0]).max(), abs(mask[1]).max()) + 2)
        return -margin, self.side + margin

    def segment(self, a, b, mask, color):
        x0, y0 = self.px(a.x, a.y)
        x1, y1 = self.px(b.x, b.y)
        lo, hi = self._window(mask)
        if not all(lo <= v <= hi for v in (x0, y0, x1, y1)):
            clipped = _clip(x0, y0, x1, y1, lo, hi)
            if clipped is None:
                return
            x0, y0, x1, y1 = clipped
        self.k.line(self.buf.pixels, math.floor(x0), math.floor(y0),
                    math.floor(x1), math.floor(y1), mask[0], mask[1], color)

    def polyline(self, points, mask, color):
        xy = np.array([self.px(q.x, q.y) for q in points], np.float64)
        lo, hi = self._window(mask)
        if len(points) == 1:
            self.k.stamp(self.buf.pixels, np.ascontiguousarray(xy[:, 0]),
                         np.ascontiguousarray(xy[:, 1]), mask[0], mask[1], color)
        elif ((xy >= lo) & (xy <= hi)).all():
            ixy = np.floor(xy).astype(np.int64)
            self.k.polyline(self.buf.pixels, np.ascontiguousarray(ixy[:, 0]),
                            np.ascontiguousarray(ixy[:, 1]), mask[0], mask[1], color)
        else:
            for a, b in zip(points, points[1:]):
                self.segment(a, b, mask, color)

    def circle(self, center, radius, mask, color):
        cx, cy = self.px(center.x, center.y)
        rad = radius * self.scale
        lo, hi = self._window(mask)
        if cx + rad < lo or cx - rad > hi or cy + rad < lo or cy - rad > hi:
            return
        n = max(16, math.ceil(2 * math.pi * rad / CIRCLE_STEP_PX))
        if lo <= cx - rad and cx + rad <= hi and lo <= cy - rad and cy + rad <= hi:
            steps = np.arange(n, dtype=np.float64)
        else:
            # Only the arc inside the window's circumscribed disc can land on the canvas.
            wc, wr = (lo + hi) / 2, (hi - lo) / math.sqrt(2)
            dist = math.hypot(wc - cx, wc - cy)
            if dist + wr < rad or dist > rad + wr:
                return
            cos_half = (rad * rad + dist * dist - wr * wr) / (2 * rad * dist) if dist else -1.0
            half = math.acos(max(-1.0, min(1.0, cos_half)))
            if half >= math.pi:
                steps = np.arange(n, dtype=np.float64)
            else:
                mid = math.atan2(-(wc - cy), wc - cx)
                first = math.floor((mid - half) * n / (2 * math.pi))
                last = math.ceil((mid + half) * n / (2 * math.pi))
                steps = (np.arange(max(first, last - n + 1), last + 1) % n).astype(np.float64)
        theta = steps * (2 * math.pi / n)
        xs = np.ascontiguousarray(cx + rad * np.cos(theta))
        ys = np.ascontiguousarray(cy - rad * np.sin(theta))
        self.k.stamp(self.buf.pixels, xs, ys, mask[0], mask[1], color)

    def dot(self, p, color):
        cx, cy = self.px(p.x, p.y)
        self.k.fill_disc(self.buf.pixels, cx, cy, DOT_RADIUS_CM * self.scale, color)

    def grid(self, g: GridPrim):
        xs, ys = g.lines()
        P = type(g.lo)
        for x in xs:
            self.segment(P(x, g.lo.y), P(x, g.hi.y), self.thin, GRID_COLOR)
        for y in ys:
            self.segment(P(g.lo.x, y), P(g.hi.x, y), self.thin, GRID_COLOR)
        o = g.origin
        self.segment(P(g.lo.x, o.y), P(g.hi.x, o.y), self.thin, AXIS_COLOR)
        self.segment(P(o.x, g.lo.y), P(o.x, g.hi.y), self.thin, AXIS_COLOR)

    def draw(self, prim):
        if isinstance(prim, CirclePrim):
            self.circle(prim.center, prim.radius, self.thin, prim.style.rgb)
        elif isinstance(prim, SegmentPrim):
            self.segment(prim.a, prim.b, self.thin, prim.style.rgb)
        elif isinstance(prim, PolylinePrim):
            self.polyline(prim.points, self.mask(prim.width), prim.style.rgb)
        elif isinstance(prim, DotPrim):
            self.dot(prim.p, prim.style.rgb)
        elif isinstance(prim, GridPrim):
            pass
        else:
            raise TypeError(f"unknown primitive {prim!r}")


def rasterize(scene: FrameScene, canvas_cm: float = 10.0, dpi: int = 600,
              backend: str | None = None) -> PixelBuffer:
    """Render ``scene`` on a square white canvas ``canvas_cm`` wide.

    Grids go down first, then every other primitive in layer order. Text
    labels are not rasterized. Content off the canvas is clipped.
    """
    if isinstance(dpi, bool) or not isinstance(dpi, int) or dpi < 1:
        raise ValueError(f"dpi must be a positive integer, got {dpi!r}")
    if not canvas_cm > 0:
        raise ValueError(f"canvas size must be > 0, got {canvas_cm!r}")
    kernels = _backend.kernels if backend is None else _backend.load(backend)
    painter = _Painter(scene, canvas_cm, dpi, kernels)
    prims = scene.primitives
    for prim in prims:
        if isinstance(prim, GridPrim):
            painter.grid(prim)
    for prim in prims:
        painter.draw(prim)
    return painter.buf


def pad_even(b: PixelBuffer) -> PixelBuffer:
    w, h = 2 * math.ceil(b.width / 2), 2 * math.ceil(b.height / 2)
    if (w, h) == (b.width, b.height):
        return b
    out = PixelBuffer.blank(w, h)
    out.pixels[: b.height, : b.width] = b.pixels
    return out


def write_ppm(b: PixelBuffer, path: str | os.PathLike) -> None:
    header = f"P6\n{b.width} {b.height}\n255\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(b.tobytes())


def read_ppm(path: str | os.PathLike) -> PixelBuffer:
    data = Path(path).read_bytes()
    fields, pos = [], 0
    while len(fields) < 4:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            pos = data.index(b"\n", pos)
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ValueError(f"{path}: truncated PPM header")
        fields.append(data[start:pos])
    pos += 1
    if fields[0] != b"P6" or fields[3] != b"255":
        raise ValueError(f"{path}: not an 8-bit binary PPM")
    w, h = int(fields[1]), int(fields[2])
    body = data[pos:pos + w * h * 3]
    if len(body) != w * h * 3:
        raise ValueError(f"{path}: truncated pixel data")
    pixels = np.frombuffer(body, np.uint8).reshape(h, w, 3).copy()
    return PixelBuffer(w, h, pixels)


def write_ppm_sequence(dir: str | os.PathLike, basename: str, buffers) -> list[Path]:
    """Write buffers one at a time so only one frame is held in memory.

    Sized inputs are capacity-checked before anything is written; plain
    iterators are checked as they go.
    """
    if hasattr(buffers, "__len__"):
        check_capacity(len(buffers))
    out_dir = Path(dir)
    paths = []
    for number, b in enumerate(buffers, start=1):
        check_capacity(number)
        if number == 1:
            out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / frame_name(basename, number, "ppm")
        write_ppm(b, path)
        paths.append(path)
    return paths
