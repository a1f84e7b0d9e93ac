"""Curve parameters, rotation algebra and the trochoid point generators.

Points on the curve are produced by composing two rotations applied to the
starting point ``P0``: a turn of the rolling circle's center about the fixed
center, and a spin of the rolling circle about its own (initial) center.
The textbook parametric equations are kept alongside as an independent
check of that construction.

Curve-construction functions take angles in degrees; the closed-form
equations take radians.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Iterator


class InvalidParamsError(ValueError):
    """Raised when a parameter set violates the curve invariants."""


class WrongFamilyError(ValueError):
    """A closed form was evaluated for the other curve family."""


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x!r}, {self.y!r})")

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, scale: float) -> Point2:
        return Point2(self.x * scale, self.y * scale)

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


ORIGIN = Point2(0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Affine2:
    """The map ``p -> (a*x + b*y + tx, c*x + d*y + ty)``."""

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    d: float = 1.0
    tx: float = 0.0
    ty: float = 0.0

    @classmethod
    def identity(cls) -> Affine2:
        return cls()

    def __call__(self, p: Point2) -> Point2:
        return Point2(self.a * p.x + self.b * p.y + self.tx,
                      self.c * p.x + self.d * p.y + self.ty)

    def __matmul__(self, inner: Affine2) -> Affine2:
        return compose(self, inner)

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def angle_deg(self) -> float:
        """Rotation angle in (-180, 180], meaningful for rigid motions."""
        return math.degrees(math.atan2(self.c, self.a))

    def inverse(self) -> Affine2:
        det = self.det
        if det == 0.0:
            raise ValueError("singular transform")
        a, b = self.d / det, -self.b / det
        c, d = -self.c / det, self.a / det
        return Affine2(a, b, c, d,
                       -(a * self.tx + b * self.ty),
                       -(c * self.tx + d * self.ty))


def compose(outer: Affine2, inner: Affine2) -> Affine2:
    """Return the transform applying ``inner`` first, then ``outer``."""
    return Affine2(
        outer.a * inner.a + outer.b * inner.c,
        outer.a * inner.b + outer.b * inner.d,
        outer.c * inner.a + outer.d * inner.c,
        outer.c * inner.b + outer.d * inner.d,
        outer.a * inner.tx + outer.b * inner.ty + outer.tx,
        outer.c * inner.tx + outer.d * inner.ty + outer.ty,
    )


def _cos_sin_deg(angle_deg: float) -> tuple[float, float]:
    # fmod is exact, so large angles keep full precision; quarter turns are exact.
    reduced = math.fmod(angle_deg, 360.0)
    if reduced < 0.0:
        reduced += 360.0
    quarter = {0.0: (1.0, 0.0), 90.0: (0.0, 1.0), 180.0: (-1.0, 0.0),
               270.0: (0.0, -1.0), 360.0: (1.0, 0.0)}
    if reduced in quarter:
        return quarter[reduced]
    rad = math.radians(reduced)
    return math.cos(rad), math.sin(rad)


def rotation_about(angle_deg: float, center: Point2 = ORIGIN) -> Affine2:
    """Counterclockwise rotation by ``angle_deg`` degrees about ``center``."""
    _require_finite("angle", angle_deg)
    cos, sin = _cos_sin_deg(angle_deg)
    cx, cy = center.x, center.y
    return Affine2(cos, -sin, sin, cos,
                   cx - cos * cx + sin * cy,
                   cy - sin * cx - cos * cy)


def t1(phi_deg: float, O_R: Point2) -> Affine2:
    """Carry the rolling circle around the fixed center."""
    return rotation_about(phi_deg, O_R)


def t2_angle(phi_deg: float, sign: int, k: float) -> float:
    """Spin of the rolling circle after it has travelled ``phi_deg``.

    No slip means equal arcs on both circles, R*phi = r*theta, hence
    theta = phi/k with k = r/R; ``sign`` reverses it for inner rolling.
    """
    if not k > 0:
        raise ValueError(f"k must be positive, got {k!r}")
    _require_finite("phi", phi_deg)
    return sign * phi_deg / k


def t2(phi_deg: float, sign: int, k: float, O_r: Point2) -> Affine2:
    return rotation_about(t2_angle(phi_deg, sign, k), O_r)


@dataclass(frozen=True)
class TrochoidParams:
    """Full parameter set of one curve.

    ``sign`` is +1 for an epitrochoid (rolling outside) and -1 for a
    hypotrochoid (rolling inside). ``N`` is the number of angular steps;
    an animation holds ``N + 1`` frames.
    """

    R: float = 4.0
    r: float = 2.0
    d: float = 2.0
    sign: int = -1
    N: int = 100
    turns: int = 1
    O_R: Point2 = field(default=ORIGIN)

    def __post_init__(self):
        for name in ("R", "r", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidParamsError(f"{name} must be a real number, got {value!r}")
            if not math.isfinite(value):
                raise InvalidParamsError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        for name in ("sign", "N", "turns"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParamsError(f"{name} must be an integer, got {value!r}")
        if not isinstance(self.O_R, Point2):
            object.__setattr__(self, "O_R", Point2(*self.O_R))
        if self.R <= 0:
            raise InvalidParamsError(f"R must be > 0, got {self.R}")
        if self.r <= 0:
            raise InvalidParamsError(f"r must be > 0, got {self.r}")
        if self.d < 0:
            raise InvalidParamsError(f"d must be >= 0, got {self.d}")
        if self.sign not in (1, -1):
            raise InvalidParamsError(f"sign must be +1 or -1, got {self.sign}")
        if self.N < 1:
            raise InvalidParamsError(f"N must be >= 1, got {self.N}")
        if self.turns < 1:
            raise InvalidParamsError(f"turns must be >= 1, got {self.turns}")

    @property
    def k(self) -> float:
        return self.r / self.R

    @property
    def frame_count(self) -> int:
        return self.N + 1

    def with_(self, **changes) -> TrochoidParams:
        return replace(self, **changes)


DEFAULTS = TrochoidParams()


def initial_layout(p: TrochoidParams) -> tuple[Point2, Point2, Point2]:
    """Return ``(O_r, P0, Q)``: rolling center, pen point and contact point."""
    O_r = p.O_R + Point2(p.R + p.sign * p.r, 0.0)
    P0 = O_r + Point2(p.d, 0.0)
    Q = O_r - Point2(p.sign * p.r, 0.0)
    return O_r, P0, Q


def motion(p: TrochoidParams, phi_deg: float) -> Affine2:
    """The rigid motion taking the initial configuration to angle ``phi_deg``.

    The spin is taken about the *initial* rolling center and applied first,
    the orbit about ``O_R`` second.
    """
    O_r, _, _ = initial_layout(p)
    return compose(t1(phi_deg, p.O_R), t2(phi_deg, p.sign, p.k, O_r))


def trochoid_point(p: TrochoidParams, phi_deg: float) -> Point2:
    _, P0, _ = initial_layout(p)
    return motion(p, phi_deg)(P0)


def sample_angles(turns: int, N: int) -> list[float]:
    """``N + 1`` evenly spaced angles from 0 to ``360*turns`` degrees inclusive."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if turns < 1:
        raise ValueError(f"turns must be >= 1, got {turns}")
    stop = 360.0 * turns
    return [stop * (i / N) for i in range(N + 1)]


def trace(p: TrochoidParams) -> list[Point2]:
    O_r, P0, _ = initial_layout(p)
    return [compose(t1(phi, p.O_R), t2(phi, p.sign, p.k, O_r))(P0)
            for phi in sample_angles(p.turns, p.N)]


# Closed forms: the reference equations, written independently of the
# rotation machinery above.

def closed_form_epitrochoid(p: TrochoidParams, phi_rad: float) -> Point2:
    if p.sign != 1:
        raise WrongFamilyError("closed_form_epitrochoid needs sign=+1")
    R, r, d = p.R, p.r, p.d
    x = (R + r) * math.cos(phi_rad) - d * math.cos((R + r) / r * phi_rad)
    y = (R + r) * math.sin(phi_rad) - d * math.sin((R + r) / r * phi_rad)
    return Point2(x + p.O_R.x, y + p.O_R.y)


def closed_form_hypotrochoid(p: TrochoidParams, phi_rad: float) -> Point2:
    if p.sign != -1:
        raise WrongFamilyError("closed_form_hypotrochoid needs sign=-1")
    R, r, d = p.R, p.r, p.d
    x = (R - r) * math.cos(phi_rad) + d * math.cos((R - r) / r * phi_rad)
    y = (R - r) * math.sin(phi_rad) - d * math.sin((R - r) / r * phi_rad)
    return Point2(x + p.O_R.x, y + p.O_R.y)


def closed_form_k(p: TrochoidParams, t: float) -> Point2:
    """Closed form in the ``t`` parameter, where ``phi = k*t``."""
    R, d, k = p.R, p.d, p.k
    if p.sign == 1:
        x = R * (k + 1) * math.cos(k * t) - d * math.cos((k + 1) * t)
        y = R * (k + 1) * math.sin(k * t) - d * math.sin((k + 1) * t)
    else:
        x = R * (1 - k) * math.cos(k * t) + d * math.cos((1 - k) * t)
        y = R * (1 - k) * math.sin(k * t) - d * math.sin((1 - k) * t)
    return Point2(x + p.O_R.x, y + p.O_R.y)


def reparam_t_of_phi(p: TrochoidParams, phi_rad: float) -> float:
    return phi_rad / p.k


def epitrochoid_phase(p: TrochoidParams) -> float:
    """Rotation (radians) between the closed-form epitrochoid and ``trace``.

    The closed form starts the pen at ``R + r - d`` while the rotation
    construction starts it at ``R + r + d``. Evaluating the closed form at
    ``phi - alpha`` and rotating the result by ``alpha = pi*r/R`` about
    ``O_R`` gives exactly ``trochoid_point(p, phi)``.
    """
    return math.pi * p.r / p.R


def closure_turns(p: TrochoidParams) -> int | None:
    """Full orbits until the curve closes, or None for non-integer radii."""
    if not (p.R.is_integer() and p.r.is_integer()):
        return None
    R, r = int(p.R), int(p.r)
    return r // math.gcd(R, r)


class CurveClass(enum.Enum):
    EPICYCLOID = "epicycloid"
    HYPOCYCLOID = "hypocycloid"
    PASCALS_SNAIL = "pascals-snail"
    ROSE = "rose"
    EPITROCHOID_GENERIC = "epitrochoid"
    HYPOTROCHOID_GENERIC = "hypotrochoid"

    @property
    def label(self) -> str:
        return {
            CurveClass.EPICYCLOID: "epicycloid",
            CurveClass.HYPOCYCLOID: "hypocycloid",
            CurveClass.PASCALS_SNAIL: "Pascal's snail (limacon)",
            CurveClass.ROSE: "rose",
            CurveClass.EPITROCHOID_GENERIC: "epitrochoid (generic)",
            CurveClass.HYPOTROCHOID_GENERIC: "hypotrochoid (generic)",
        }[self]


CLASSIFY_RTOL = 1e-9


def _close(a: float, b: float, rtol: float = CLASSIFY_RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def classify(p: TrochoidParams) -> CurveClass:
    # Precedence: pen on the rim first, then r == R, then d == R + r.
    if p.sign == 1:
        if _close(p.d, p.r):
            return CurveClass.EPICYCLOID
        if _close(p.r, p.R):
            return CurveClass.PASCALS_SNAIL
        if _close(p.d, p.R + p.r):
            return CurveClass.ROSE
        return CurveClass.EPITROCHOID_GENERIC
    if _close(p.d, p.r):
        return CurveClass.HYPOCYCLOID
    return CurveClass.HYPOTROCHOID_GENERIC
