"""Hopf map from the unit 3-sphere to the unit 2-sphere.

Component binding is ``(a, b, c, d) = (w, x, y, z)``:

    h(a, b, c, d) = (a^2 + b^2 - c^2 - d^2, 2(ad + bc), 2(bd - ac))

Fibers are the circles ``q (cos psi + i sin psi)``.
"""

from __future__ import annotations

from typing import List, NamedTuple, Tuple

from .kli_flow import InterpolationCurve
from .quat_core import Quaternion


class SpherePoint3(NamedTuple):
    x: float
    y: float
    z: float


def hopf_project(q: Quaternion) -> SpherePoint3:
    a, b, c, d = q.w, q.x, q.y, q.z
    return SpherePoint3(a * a + b * b - c * c - d * d, 2.0 * (a * d + b * c), 2.0 * (b * d - a * c))


def hopf_project_curve(curve: InterpolationCurve) -> List[Tuple[float, SpherePoint3]]:
    return [(t, hopf_project(q)) for t, q in curve.samples]
