"""Numpy raster kernels, used when the compiled extension is unavailable.

Every function here has a twin in ``_ckernels.pyx`` producing the same pixels.
Buffers are ``uint8`` arrays of shape ``(height, width, 3)``.
"""

import numpy as np


def _put(buf, px, py, mdx, mdy, color):
    h, w = buf.shape[:2]
    xs = (px[:, None] + mdx[None, :]).ravel()
    ys = (py[:, None] + mdy[None, :]).ravel()
    keep = (xs >= 0) & (xs < w) & (ys >= 0) & (ys < h)
    buf[ys[keep], xs[keep]] = color


def _line_pixels(x0, y0, x1, y1):
    dx, dy = x1 - x0, y1 - y0
    sx = 1 if dx >= 0 else -1
    sy = 1 if dy >= 0 else -1
    adx, ady = dx * sx, dy * sy
    n = max(adx, ady)
    if n == 0:
        return np.array([x0], np.int64), np.array([y0], np.int64)
    i = np.arange(n + 1, dtype=np.int64)
    return (x0 + sx * ((2 * i * adx + n) // (2 * n)),
            y0 + sy * ((2 * i * ady + n) // (2 * n)))


def stamp(buf, xs, ys, mdx, mdy, color):
    px = np.floor(np.asarray(xs, np.float64)).astype(np.int64)
    py = np.floor(np.asarray(ys, np.float64)).astype(np.int64)
    _put(buf, px, py, mdx, mdy, color)


def line(buf, x0, y0, x1, y1, mdx, mdy, color):
    px, py = _line_pixels(int(x0), int(y0), int(x1), int(y1))
    _put(buf, px, py, mdx, mdy, color)


def polyline(buf, px, py, mdx, mdy, color):
    px = [int(v) for v in px]
    py = [int(v) for v in py]
    if len(px) == 1:
        _put(buf, np.array(px, np.int64), np.array(py, np.int64), mdx, mdy, color)
        return
    parts = [_line_pixels(px[i], py[i], px[i + 1], py[i + 1]) for i in range(len(px) - 1)]
    _put(buf, np.concatenate([a for a, _ in parts]), np.concatenate([b for _, b in parts]),
         mdx, mdy, color)


def fill_disc(buf, cx, cy, radius, color):
    h, w = buf.shape[:2]
    x0, x1 = int(np.floor(cx - radius)), int(np.floor(cx + radius))
    y0, y1 = int(np.floor(cy - radius)), int(np.floor(cy + radius))
    ys, xs = np.mgrid[y0:y1 + 1, x0:x1 + 1]
    ddx = xs + 0.5 - cx
    ddy = ys + 0.5 - cy
    inside = ddx * ddx + ddy * ddy <= radius * radius
    if not inside.any():
        xs = np.array([int(np.floor(cx))])
        ys = np.array([int(np.floor(cy))])
    else:
        xs, ys = xs[inside], ys[inside]
    keep = (xs >= 0) & (xs < w) & (ys >= 0) & (ys < h)
    buf[ys[keep], xs[keep]] = color
