"""Spherical linear interpolation, the baseline KLI is compared against."""

from __future__ import annotations

import math

from .errors import AntipodalInput, DomainError
from .kli_flow import ANTIPODAL_MARGIN, InterpolationCurve
from .quat_core import UnitQuaternion, as_unit, conjugate, dot, multiply, normalize, power

# below this arc angle the sine-weighted form is replaced by normalized lerp
NLERP_ANGLE = 1e-6


def _prepare(p, r, t, shortest_path):
    p, r = as_unit(p), as_unit(r)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"SLERP parameter t={t!r} is outside [0, 1]")
    if shortest_path and dot(p, r) < 0.0:
        r = -r
    c = dot(p, r)
    if c <= -1.0 + ANTIPODAL_MARGIN:
        raise AntipodalInput(f"SLERP between antipodal quaternions (dot={c!r}) is undefined")
    return p, r, c


def slerp_eval(p, r, t: float, shortest_path: bool = False) -> UnitQuaternion:
    """``(sin((1-t) W) p + sin(t W) r) / sin W`` with ``W = arccos(p.r)``.

    The endpoints are returned as given.  Arcs shorter than ``NLERP_ANGLE``
    fall back to normalized linear interpolation.
    """
    p, r, c = _prepare(p, r, t, shortest_path)
    if t == 0.0:
        return p
    if t == 1.0:
        return r
    c = max(-1.0, min(1.0, c))
    omega = math.acos(c)
    if omega < NLERP_ANGLE:
        return normalize((1.0 - t) * p + t * r)
    s = math.sin(omega)
    a = math.sin((1.0 - t) * omega) / s
    b = math.sin(t * omega) / s
    return UnitQuaternion(*(a * pi + b * ri for pi, ri in zip(p, r)))


def slerp_power(p, r, t: float, shortest_path: bool = False) -> UnitQuaternion:
    """Same interpolant computed as ``p (conj(p) r)^t``."""
    p, r, _ = _prepare(p, r, t, shortest_path)
    rel = as_unit(multiply(conjugate(p), r))
    return as_unit(multiply(p, power(rel, t)))


def slerp_sample(p, r, n: int, shortest_path: bool = False) -> InterpolationCurve:
    """``n`` SLERP samples at ``t = k / (n - 1)``; ``converged_time`` is 1 by convention."""
    if int(n) != n or n < 2:
        raise DomainError(f"need at least 2 samples, got {n!r}")
    n = int(n)
    p, r = as_unit(p), as_unit(r)
    if shortest_path and dot(p, r) < 0.0:
        r = -r
    step = 1.0 / (n - 1)
    samples = []
    for k in range(n):
        t = 1.0 if k == n - 1 else k * step
        samples.append((t, slerp_eval(p, r, t)))
    return InterpolationCurve(samples, 1.0, r, step)
