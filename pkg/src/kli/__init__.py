"""Rotation interpolation with the Kuramoto-Lohe flow on the unit 3-sphere."""

from .analysis import PathComparison, generate_frames, geodesic_distance, path_deviation, progress_map
from .errors import (
    AntipodalInput,
    DegenerateArc,
    DomainError,
    KLIError,
    NearZeroQuaternion,
    NonConvergence,
    NonUnitQuaternion,
    TimeNotSampled,
)
from .hopf import SpherePoint3, hopf_project, hopf_project_curve
from .kli_flow import InterpolationCurve, KLIConfig, closed_form_solution, kli_interpolate, rhs, rk4_step
from .quat_core import (
    IDENTITY,
    AxisAngle,
    Quaternion,
    UnitQuaternion,
    conjugate,
    dot,
    from_axis_angle,
    multiply,
    norm,
    normalize,
    power,
    rotate_vector,
    to_axis_angle,
)
from .slerp_ref import slerp_eval, slerp_power, slerp_sample

__version__ = "0.1.0"
