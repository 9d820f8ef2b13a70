"""KLI-versus-SLERP path metrics and rotated-object frames."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DegenerateArc, TimeNotSampled
from .kli_flow import InterpolationCurve, KLIConfig, kli_interpolate
from .quat_core import UnitQuaternion, Vec3, as_unit, dot, rotate_vector

#: corners of the unit cube, the default object for frame generation
UNIT_CUBE: List[Vec3] = [
    (float(x), float(y), float(z)) for x in (0, 1) for y in (0, 1) for z in (0, 1)
]


@dataclass(frozen=True)
class PathComparison:
    max_deviation: float
    endpoint_error: float
    converged_time: float
    sample_count: int

    def as_dict(self) -> dict:
        return asdict(self)


def geodesic_distance(p, q) -> float:
    """Great-circle distance on the 3-sphere, in radians (``q`` and ``-q`` are pi apart)."""
    return math.acos(max(-1.0, min(1.0, dot(p, q))))


def _arc_frame(p: UnitQuaternion, r: UnitQuaternion):
    pv = np.array(p.as_tuple())
    rv = np.array(r.as_tuple())
    c = float(pv @ rv)
    perp = rv - c * pv
    s = float(np.linalg.norm(perp))
    if s < 1e-12:
        raise DegenerateArc(f"p and r are parallel or antipodal (dot={c!r}); the arc is undefined")
    return pv, perp / s, math.atan2(s, c)


def _angle_between(pts: np.ndarray, u: np.ndarray) -> np.ndarray:
    # atan2 of half-chords; arccos of the dot loses half the digits near 0
    return 2.0 * np.arctan2(np.linalg.norm(pts - u, axis=1), np.linalg.norm(pts + u, axis=1))


def arc_distances(points: np.ndarray, p, r) -> np.ndarray:
    """Geodesic distance of each row of ``points`` (shape ``(n, 4)``) to the arc from ``p`` to ``r``."""
    e1, e2, omega = _arc_frame(as_unit(p), as_unit(r))
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    u = pts @ e1
    v = pts @ e2
    resid = pts - np.outer(u, e1) - np.outer(v, e2)
    rn = np.linalg.norm(resid, axis=1)
    alpha = np.arctan2(v, u)
    inside = (alpha >= 0.0) & (alpha <= omega)
    # inside the wedge: angle between point and its projection onto the plane
    d_plane = np.arctan2(rn, np.hypot(u, v))
    rv = math.cos(omega) * e1 + math.sin(omega) * e2
    end_p = _angle_between(pts, e1)
    end_r = _angle_between(pts, rv)
    return np.where(inside, d_plane, np.minimum(end_p, end_r))


def path_deviation(kli: InterpolationCurve, p, r) -> PathComparison:
    """Largest distance from a curve's samples to the SLERP arc between ``p`` and ``r``."""
    p, r = as_unit(p), as_unit(r)
    pts = np.array([q.as_tuple() for q in kli.quaternions])
    dev = float(np.max(arc_distances(pts, p, r)))
    endpoint = math.sqrt(sum((a - b) ** 2 for a, b in zip(r, kli.final)))
    return PathComparison(dev, endpoint, kli.converged_time, len(kli))


def progress_map(curve: InterpolationCurve, p, r) -> List[Tuple[float, float]]:
    """Map curve time to the SLERP parameter at the same point: ``s = 1 - phi(t) / phi0``.

    ``phi`` is the geodesic distance to ``r``.
    """
    p, r = as_unit(p), as_unit(r)
    phi0 = geodesic_distance(p, r)
    if phi0 < 1e-9:
        raise DegenerateArc(f"p and r coincide (distance {phi0!r})")
    return [(t, (phi0 - geodesic_distance(q, r)) / phi0) for t, q in curve.samples]


def generate_frames(
    p,
    r,
    times: Sequence[float],
    object_points: Sequence[Sequence[float]] | None = None,
    cfg: KLIConfig | None = None,
    curve: InterpolationCurve | None = None,
) -> List[Tuple[float, List[Vec3]]]:
    """Rotate ``object_points`` by the KLI quaternion at each requested time.

    Times must lie on the integrator grid within ``[0, converged_time]``.  A
    precomputed ``curve`` for the same ``(p, r, cfg)`` may be passed to skip
    re-integration.
    """
    cfg = cfg or KLIConfig()
    points = UNIT_CUBE if object_points is None else [tuple(map(float, v)) for v in object_points]
    if curve is None:
        curve = kli_interpolate(p, r, cfg)
    frames = []
    for t in times:
        if t < 0 or t > curve.converged_time + 1e-9:
            raise TimeNotSampled(f"t={t!r} is outside [0, {curve.converged_time!r}]")
        q = curve.sample_at(t)
        frames.append((t, [rotate_vector(q, v) for v in points]))
    return frames
