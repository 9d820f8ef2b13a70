"""Exception types raised across the package."""


class KLIError(Exception):
    """Base class for every error raised by :mod:`kli`."""


class NearZeroQuaternion(KLIError, ValueError):
    pass


class NonUnitQuaternion(KLIError, ValueError):
    pass


class AntipodalInput(KLIError, ValueError):
    """Endpoints are (numerically) antipodal; the flow cannot leave the start."""


class NonConvergence(KLIError, RuntimeError):
    """The KLI loop passed ``t_max`` without getting within ``epsilon`` of the target."""


class DomainError(KLIError, ValueError):
    pass


class DegenerateArc(KLIError, ValueError):
    """The arc between the endpoints has (near) zero length or is undefined."""


class TimeNotSampled(KLIError, LookupError):
    pass
