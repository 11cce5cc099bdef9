"""Semantic exception hierarchy shared across the package.

Everything derives from :class:`FreemultError` so callers can catch the
library's failures in one clause.  Input-validation errors double as
``ValueError``; iteration failures double as ``ArithmeticError``.
"""


class FreemultError(Exception):
    pass


class OutsideDomain(FreemultError, ValueError):
    """Evaluation point outside the transform's domain."""


class NonzeroConstantTerm(FreemultError, ValueError):
    """Series composition requires the inner series to vanish at 0."""


class ZeroConstantTerm(FreemultError, ValueError):
    """log/pow of a series requires a nonzero constant term."""


class ZeroDerivative(FreemultError, ValueError):
    """Series inversion requires a nonzero linear coefficient."""


class WrongVanishingOrder(FreemultError, ValueError):
    """Branched inversion of order k requires a zero of order exactly k."""


class DivergentLimit(FreemultError, ArithmeticError):
    """Radial extrapolants grow without bound (atom / singular point)."""


class NoSignChange(FreemultError, ValueError):
    """Root bracket does not certify a sign change."""


class ZeroMean(FreemultError, ValueError):
    """Operation requires a measure with nonzero mean."""


class EtaVanishes(FreemultError, ValueError):
    """eta vanishes where the operation needs it nonzero."""


class HaarLike(FreemultError, ValueError):
    """All moments vanish through the truncation order."""


class MaxIterations(FreemultError, ArithmeticError):
    """Fixed-point or Newton iteration hit its iteration cap."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NonConvergence(MaxIterations):
    """Damped iteration failed; carries the residual trail for diagnosis."""

    def __init__(self, message, trail=()):
        super().__init__(message, residual=trail[-1] if trail else None)
        self.trail = tuple(trail)


class NonPositiveMeanBranch(FreemultError, ValueError):
    """Canonical powers need a positive real mean to pin the branch."""


class BooleanPowerOutOfRange(FreemultError, ValueError):
    """Half-line Boolean powers only exist for exponents in [0, 1]."""


class MeanMismatch(FreemultError, ValueError):
    """Measure is not in the admissible mean class for this inversion."""


class RootBracketFailure(FreemultError, ValueError):
    """Curve tracer found no admissible root in the slice (off-support)."""


class EmptyLevel(FreemultError, ValueError):
    """No point of the window satisfies the requested level equation."""


class PathEscapedDomain(FreemultError, ArithmeticError):
    """Homotopy path left the invertibility domain; refine the path."""


class SpecFormatError(FreemultError, ValueError):
    """Measure specification document is malformed."""
