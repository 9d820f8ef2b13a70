"""Quaternion algebra.

Quaternions are stored scalar first, ``(w, x, y, z)`` for ``w + xi + yj + zk``.
Every type here is an immutable value and every function is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .errors import NearZeroQuaternion, NonUnitQuaternion

Vec3 = Tuple[float, float, float]

#: below this norm a quaternion cannot be normalized
ZERO_NORM = 1e-12
#: unit-quaternion construction renormalizes within this distance of norm 1
UNIT_TOLERANCE = 1e-6


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"quaternion component {name}={value!r} is not finite")
            object.__setattr__(self, name, value)

    @classmethod
    def from_seq(cls, values: Iterable[float]):
        vals = tuple(values)
        if len(vals) != 4:
            raise ValueError(f"expected 4 components, got {len(vals)}")
        return cls(*vals)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.as_tuple())

    @property
    def vector(self) -> Vec3:
        return (self.x, self.y, self.z)

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return type(self)(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return multiply(self, other)
        s = float(other)
        return Quaternion(s * self.w, s * self.x, s * self.y, s * self.z)

    def __rmul__(self, other):
        s = float(other)
        return Quaternion(s * self.w, s * self.x, s * self.y, s * self.z)


@dataclass(frozen=True, slots=True)
class UnitQuaternion(Quaternion):
    """Quaternion of norm 1, i.e. a rotation / point on the 3-sphere.

    Inputs within ``UNIT_TOLERANCE`` of norm 1 are renormalized; anything
    further off raises :class:`NonUnitQuaternion`.
    """

    def __post_init__(self):
        Quaternion.__post_init__(self)
        n = math.sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)
        if n <= ZERO_NORM:
            raise NearZeroQuaternion(f"quaternion norm {n!r} is too close to zero")
        if abs(n - 1.0) >= UNIT_TOLERANCE:
            raise NonUnitQuaternion(
                f"quaternion {self.as_tuple()} has norm {n!r}, not within {UNIT_TOLERANCE} of 1"
            )
        if abs(n - 1.0) > 1e-15:
            object.__setattr__(self, "w", self.w / n)
            object.__setattr__(self, "x", self.x / n)
            object.__setattr__(self, "y", self.y / n)
            object.__setattr__(self, "z", self.z / n)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return multiply(self, other)
        return Quaternion.__mul__(self, other)


IDENTITY = UnitQuaternion(1.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class AxisAngle:
    axis: Vec3
    angle: float


def multiply(lhs: Quaternion, rhs: Quaternion) -> Quaternion:
    """Hamilton product ``lhs * rhs``."""
    a1, b1, c1, d1 = lhs.w, lhs.x, lhs.y, lhs.z
    a2, b2, c2, d2 = rhs.w, rhs.x, rhs.y, rhs.z
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def conjugate(q: Quaternion) -> Quaternion:
    return type(q)(q.w, -q.x, -q.y, -q.z)


def dot(p: Quaternion, q: Quaternion) -> float:
    """Euclidean inner product in R^4."""
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z


def norm(q: Quaternion) -> float:
    return math.sqrt(dot(q, q))


def normalize(q: Quaternion) -> UnitQuaternion:
    n = norm(q)
    if n <= ZERO_NORM:
        raise NearZeroQuaternion(f"cannot normalize quaternion of norm {n!r}")
    return UnitQuaternion(q.w / n, q.x / n, q.y / n, q.z / n)


def as_unit(q: Quaternion | Sequence[float]) -> UnitQuaternion:
    """Coerce a quaternion or 4-sequence to :class:`UnitQuaternion` (tolerant renormalization)."""
    if isinstance(q, UnitQuaternion):
        return q
    if isinstance(q, Quaternion):
        return UnitQuaternion(q.w, q.x, q.y, q.z)
    return UnitQuaternion.from_seq(q)


def _polar(q: Quaternion) -> tuple[float, Vec3]:
    # half angle in [0, pi]; axis falls back to (1, 0, 0) when undefined
    vn = math.sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
    half = math.atan2(vn, q.w)
    if vn == 0.0:
        return half, (1.0, 0.0, 0.0)
    return half, (q.x / vn, q.y / vn, q.z / vn)


def power(q: UnitQuaternion, t: float) -> UnitQuaternion:
    """Real power of a unit quaternion through its polar form.

    ``q = cos(theta/2) + U sin(theta/2)`` maps to ``cos(t theta/2) + U sin(t theta/2)``.
    For ``q = -1`` the axis is taken as ``(1, 0, 0)``.
    """
    half, (ux, uy, uz) = _polar(q)
    a = t * half
    s = math.sin(a)
    return UnitQuaternion(math.cos(a), ux * s, uy * s, uz * s)


def to_axis_angle(q: UnitQuaternion) -> AxisAngle:
    """Axis-angle (polar) form; the identity maps to axis ``(1, 0, 0)``, angle 0.

    ``-1`` has no angle in ``[0, 2pi)`` that reproduces it, so it comes back
    as angle ``2pi`` with the conventional axis.
    """
    half, axis = _polar(q)
    return AxisAngle(axis, 2.0 * half)


def from_axis_angle(aa: AxisAngle) -> UnitQuaternion:
    ax, ay, az = aa.axis
    n = math.sqrt(ax * ax + ay * ay + az * az)
    if n <= ZERO_NORM:
        raise NearZeroQuaternion("rotation axis has zero length")
    s = math.sin(aa.angle / 2.0) / n
    return UnitQuaternion(math.cos(aa.angle / 2.0), ax * s, ay * s, az * s)


def rotate_vector(q: UnitQuaternion, v: Sequence[float]) -> Vec3:
    """Rotate a 3-vector: vector part of ``q (0, v) conj(q)``."""
    pure = Quaternion(0.0, float(v[0]), float(v[1]), float(v[2]))
    out = multiply(multiply(q, pure), conjugate(q))
    return (out.x, out.y, out.z)
