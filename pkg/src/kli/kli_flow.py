"""Kuramoto-Lohe interpolation (KLI).

The single-oscillator Lohe model with coupling ``f = -1/2 (q conj(r) q - r)``
gives the flow

    q' = -1/2 (q conj(r) q - r)

on the unit 3-sphere.  For unit ``q`` the identity ``q conj(r) q = 2 (q.r) q - r``
reduces it to ``q' = r - (q.r) q``, the tangential projection of ``r`` at ``q``.
Solutions run along the great circle through ``p = q(0)`` and ``r`` and reach
``r`` as ``t -> inf``.  :func:`kli_interpolate` integrates the flow with a
fixed-step RK4 scheme and stops once ``||r - q(T)|| < epsilon``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .errors import AntipodalInput, NonConvergence, TimeNotSampled
from .quat_core import Quaternion, UnitQuaternion, as_unit, dot

log = logging.getLogger(__name__)

ANTIPODAL_MARGIN = 1e-12

_Q4 = Tuple[float, float, float, float]


@dataclass(frozen=True)
class KLIConfig:
    """Parameters of the KLI loop.

    Defaults are the values used for the reference experiment
    (``epsilon=1e-5``, ``delta=0.01``) with an RK4 step equal to ``delta``.
    """

    epsilon: float = 1e-5
    delta: float = 0.01
    step_h: float = 0.01
    t_max: float = 100.0
    shortest_path: bool = False

    def __post_init__(self):
        for name in ("epsilon", "delta", "step_h", "t_max"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise ValueError(f"{name} must be a finite real, got {v!r}")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.delta <= 0 or self.step_h <= 0:
            raise ValueError("delta and step_h must be positive")
        if self.step_h > self.delta * (1 + 1e-12):
            raise ValueError(f"step_h={self.step_h} exceeds delta={self.delta}")
        if self.t_max < self.delta:
            raise ValueError(f"t_max={self.t_max} is smaller than delta={self.delta}")
        ratio = self.delta / self.step_h
        if abs(ratio - round(ratio)) > 1e-12 * max(1.0, ratio):
            raise ValueError(f"delta={self.delta} is not an integer multiple of step_h={self.step_h}")

    @property
    def steps_per_check(self) -> int:
        return int(round(self.delta / self.step_h))

    def as_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "delta": self.delta,
            "step_h": self.step_h,
            "t_max": self.t_max,
            "shortest_path": self.shortest_path,
        }


@dataclass(frozen=True)
class InterpolationCurve:
    """Samples ``(t, q(t))`` on a uniform grid of spacing ``step``, starting at ``t = 0``."""

    samples: List[Tuple[float, UnitQuaternion]]
    converged_time: float
    target: UnitQuaternion
    step: float = field(default=0.01)

    def __len__(self):
        return len(self.samples)

    @property
    def times(self) -> np.ndarray:
        return np.array([t for t, _ in self.samples])

    @property
    def quaternions(self) -> List[UnitQuaternion]:
        return [q for _, q in self.samples]

    @property
    def initial(self) -> UnitQuaternion:
        return self.samples[0][1]

    @property
    def final(self) -> UnitQuaternion:
        return self.samples[-1][1]

    def as_array(self) -> np.ndarray:
        """``(n, 5)`` array with columns ``t, w, x, y, z``."""
        return np.array([(t, q.w, q.x, q.y, q.z) for t, q in self.samples])

    def sample_at(self, t: float, tol: float = 1e-9) -> UnitQuaternion:
        """Return the recorded quaternion at grid time ``t``."""
        if self.step <= 0:
            idx = 0
        else:
            idx = int(round(t / self.step))
        if idx < 0 or idx >= len(self.samples) or abs(self.samples[idx][0] - t) > tol:
            raise TimeNotSampled(
                f"t={t!r} is not on the sampling grid (step {self.step}, "
                f"range [0, {self.samples[-1][0]!r}])"
            )
        return self.samples[idx][1]


def _rhs4(q: _Q4, r: _Q4) -> _Q4:
    c = q[0] * r[0] + q[1] * r[1] + q[2] * r[2] + q[3] * r[3]
    return (r[0] - c * q[0], r[1] - c * q[1], r[2] - c * q[2], r[3] - c * q[3])


def _rk4_4(q: _Q4, r: _Q4, h: float) -> _Q4:
    k1 = _rhs4(q, r)
    hh = 0.5 * h
    k2 = _rhs4((q[0] + hh * k1[0], q[1] + hh * k1[1], q[2] + hh * k1[2], q[3] + hh * k1[3]), r)
    k3 = _rhs4((q[0] + hh * k2[0], q[1] + hh * k2[1], q[2] + hh * k2[2], q[3] + hh * k2[3]), r)
    k4 = _rhs4((q[0] + h * k3[0], q[1] + h * k3[1], q[2] + h * k3[2], q[3] + h * k3[3]), r)
    s = h / 6.0
    out = [q[i] + s * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) for i in range(4)]
    n = math.sqrt(out[0] * out[0] + out[1] * out[1] + out[2] * out[2] + out[3] * out[3])
    return (out[0] / n, out[1] / n, out[2] / n, out[3] / n)


def rhs(q: UnitQuaternion, r: UnitQuaternion) -> Quaternion:
    """Tangent vector ``-1/2 (q conj(r) q - r)`` at ``q``, evaluated as ``r - (q.r) q``."""
    return Quaternion(*_rhs4(q.as_tuple(), r.as_tuple()))


def rk4_step(q: UnitQuaternion, r: UnitQuaternion, h: float) -> UnitQuaternion:
    """One classical RK4 step of the flow followed by renormalization."""
    return UnitQuaternion(*_rk4_4(q.as_tuple(), r.as_tuple(), h))


def integrate(p, r, h: float, n_steps: int) -> List[Tuple[float, UnitQuaternion]]:
    """Fixed-horizon RK4 integration from ``q(0) = p``; returns ``n_steps + 1`` samples."""
    p, r = as_unit(p), as_unit(r)
    q = p.as_tuple()
    rt = r.as_tuple()
    out = [(0.0, p)]
    for i in range(1, n_steps + 1):
        q = _rk4_4(q, rt, h)
        out.append((i * h, UnitQuaternion(*q)))
    return out


def _check_not_antipodal(p: UnitQuaternion, r: UnitQuaternion):
    c = dot(p, r)
    if c <= -1.0 + ANTIPODAL_MARGIN:
        raise AntipodalInput(
            f"endpoints {p.as_tuple()} and {r.as_tuple()} are antipodal (dot={c!r}); "
            "the flow is stationary at p"
        )


def kli_interpolate(p, r, cfg: KLIConfig | None = None) -> InterpolationCurve:
    """Run the KLI loop from ``p`` towards ``r``.

    The flow is integrated with step ``cfg.step_h``, one sample per step.  At
    ``T = 0, delta, 2 delta, ...`` the stopping test ``||r - q(T)|| < epsilon``
    is evaluated; the first ``T`` that passes becomes ``converged_time`` and the
    curve ends there.

    With ``cfg.shortest_path`` the target is negated when ``dot(p, r) < 0``;
    the curve's ``target`` records the quaternion actually approached.

    Raises:
        AntipodalInput: ``dot(p, r) <= -1 + 1e-12`` without ``shortest_path``.
        NonConvergence: no check up to ``cfg.t_max`` passed.
    """
    cfg = cfg or KLIConfig()
    p, r = as_unit(p), as_unit(r)
    if cfg.shortest_path and dot(p, r) < 0.0:
        r = -r
    _check_not_antipodal(p, r)

    h = cfg.step_h
    per_check = cfg.steps_per_check
    rt = r.as_tuple()
    q = p.as_tuple()
    samples: List[Tuple[float, UnitQuaternion]] = [(0.0, p)]
    eps2 = cfg.epsilon * cfg.epsilon
    i = 0
    while True:
        T = i * h
        d2 = sum((a - b) ** 2 for a, b in zip(rt, q))
        if d2 < eps2:
            log.debug("converged at T=%s after %d steps", T, i)
            return InterpolationCurve(samples, T, r, h)
        if T + cfg.delta > cfg.t_max * (1 + 1e-12):
            raise NonConvergence(
                f"||r - q(T)|| = {math.sqrt(d2):.3e} >= epsilon={cfg.epsilon} at T={T:g} "
                f"(t_max={cfg.t_max})"
            )
        for _ in range(per_check):
            q = _rk4_4(q, rt, h)
            i += 1
            samples.append((i * h, UnitQuaternion(*q)))


def closed_form_solution(p, r, t: float) -> UnitQuaternion:
    """Exact solution of the flow at time ``t``.

    Writing ``p = cos(a0) r + sin(a0) w`` with ``w`` orthogonal to ``r``, the
    angle to the target obeys ``a' = -sin a``, so
    ``tan(a(t)/2) = tan(a0/2) exp(-t)`` and ``q(t) = cos(a(t)) r + sin(a(t)) w``.
    """
    p, r = as_unit(p), as_unit(r)
    _check_not_antipodal(p, r)
    c = dot(p, r)
    perp = [pi - c * ri for pi, ri in zip(p, r)]
    s = math.sqrt(sum(v * v for v in perp))
    if s == 0.0:
        return r if c > 0 else p
    a0 = math.atan2(s, c)
    a = 2.0 * math.atan(math.tan(0.5 * a0) * math.exp(-t))
    ca, sa = math.cos(a), math.sin(a) / s
    return UnitQuaternion(*(ca * ri + sa * wi for ri, wi in zip(r, perp)))
