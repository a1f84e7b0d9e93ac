# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled raster kernels. Must stay pixel-identical to ``_pykernels``."""

cimport numpy as cnp
from libc.math cimport floor

cnp.import_array()

ctypedef cnp.int64_t i64


cdef inline void _put(unsigned char[:, :, ::1] buf, i64 x, i64 y,
                      const i64[::1] mdx, const i64[::1] mdy,
                      unsigned char r, unsigned char g, unsigned char b) noexcept nogil:
    cdef Py_ssize_t h = buf.shape[0], w = buf.shape[1], m
    cdef i64 px, py
    for m in range(mdx.shape[0]):
        px = x + mdx[m]
        py = y + mdy[m]
        if 0 <= px < w and 0 <= py < h:
            buf[py, px, 0] = r
            buf[py, px, 1] = g
            buf[py, px, 2] = b


cdef inline void _line(unsigned char[:, :, ::1] buf, i64 x0, i64 y0, i64 x1, i64 y1,
                       const i64[::1] mdx, const i64[::1] mdy,
                       unsigned char r, unsigned char g, unsigned char b) noexcept nogil:
    cdef i64 dx = x1 - x0, dy = y1 - y0
    cdef i64 sx = 1 if dx >= 0 else -1
    cdef i64 sy = 1 if dy >= 0 else -1
    cdef i64 adx = dx * sx, ady = dy * sy
    cdef i64 n = adx if adx > ady else ady
    cdef i64 i
    if n == 0:
        _put(buf, x0, y0, mdx, mdy, r, g, b)
        return
    for i in range(n + 1):
        _put(buf,
             x0 + sx * ((2 * i * adx + n) // (2 * n)),
             y0 + sy * ((2 * i * ady + n) // (2 * n)),
             mdx, mdy, r, g, b)


def stamp(unsigned char[:, :, ::1] buf, const double[::1] xs, const double[::1] ys,
          const i64[::1] mdx, const i64[::1] mdy, color):
    cdef unsigned char r = color[0], g = color[1], b = color[2]
    cdef Py_ssize_t i
    with nogil:
        for i in range(xs.shape[0]):
            _put(buf, <i64>floor(xs[i]), <i64>floor(ys[i]), mdx, mdy, r, g, b)


def line(unsigned char[:, :, ::1] buf, i64 x0, i64 y0, i64 x1, i64 y1,
         const i64[::1] mdx, const i64[::1] mdy, color):
    cdef unsigned char r = color[0], g = color[1], b = color[2]
    with nogil:
        _line(buf, x0, y0, x1, y1, mdx, mdy, r, g, b)


def polyline(unsigned char[:, :, ::1] buf, const i64[::1] px, const i64[::1] py,
             const i64[::1] mdx, const i64[::1] mdy, color):
    cdef unsigned char r = color[0], g = color[1], b = color[2]
    cdef Py_ssize_t i, n = px.shape[0]
    with nogil:
        if n == 1:
            _put(buf, px[0], py[0], mdx, mdy, r, g, b)
        for i in range(n - 1):
            _line(buf, px[i], py[i], px[i + 1], py[i + 1], mdx, mdy, r, g, b)


def fill_disc(unsigned char[:, :, ::1] buf, double cx, double cy, double radius, color):
    cdef unsigned char r = color[0], g = color[1], b = color[2]
    cdef Py_ssize_t h = buf.shape[0], w = buf.shape[1]
    cdef i64 x, y, x0, x1, y0, y1
    cdef double ddx, ddy, rr = radius * radius
    cdef bint hit = False
    x0 = <i64>floor(cx - radius)
    x1 = <i64>floor(cx + radius)
    y0 = <i64>floor(cy - radius)
    y1 = <i64>floor(cy + radius)
    with nogil:
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                ddx = x + 0.5 - cx
                ddy = y + 0.5 - cy
                if ddx * ddx + ddy * ddy <= rr:
                    hit = True
                    if 0 <= x < w and 0 <= y < h:
                        buf[y, x, 0] = r
                        buf[y, x, 1] = g
                        buf[y, x, 2] = b
        if not hit:
            x = <i64>floor(cx)
            y = <i64>floor(cy)
            if 0 <= x < w and 0 <= y < h:
                buf[y, x, 0] = r
                buf[y, x, 1] = g
                buf[y, x, 2] = b
