"""Exception types shared across the package."""


class SummaError(Exception):
    """Base class for all package-specific errors."""


class PoleError(SummaError):
    """Evaluation requested at (or within guard radius of) a pole."""


class DomainError(SummaError):
    """Argument outside the real domain of a special function."""


class QuadratureError(SummaError):
    """Adaptive integrator failed to reach the requested tolerance."""


class TailError(SummaError):
    """Truncated line integral has a non-negligible tail at the cut height."""


class TailBoundError(SummaError):
    """A series tail cannot be certified below tolerance at the table limit."""


class ConvergenceError(SummaError):
    """Series terms fail the convergence criterion at the truncation point."""


class OscillationError(SummaError):
    """Oscillatory integral estimator failed to stabilise."""


class PoleOnBoundaryError(SummaError):
    """A contour passes too close to a pole of the integrand."""


class ZeroProximityError(SummaError):
    """A contour truncation height sits too close to a zeta-zero ordinate."""


class NotAZeroError(SummaError):
    """Argument is not one of the tabulated nontrivial zeros."""


class CapacityError(SummaError):
    """Requested sieve size exceeds the configured memory budget."""


class FormatError(SummaError):
    """A fixture file does not match its declared format."""
