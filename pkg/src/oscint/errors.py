"""Exception types raised across the library."""


class OscintError(Exception):
    """Base class for all library-specific errors."""


class InvalidFrequency(OscintError):
    """Fitted frequency v is outside (0, v_max] for a fitted method."""


class PoleProximity(OscintError):
    """v lies within the exclusion radius of a denominator zero (other than v=0)."""


class PrecisionInsufficient(OscintError):
    """Extended-precision evaluation could not certify 12 correct digits."""


class OutOfValidityRange(OscintError):
    """|v| exceeds the truncated-series validity radius."""


class DegenerateDenominator(OscintError):
    """The phase-lag denominator vanishes at the requested frequency."""


class LeadingCoefficientZero(OscintError):
    """Characteristic polynomial has a (numerically) zero leading coefficient."""


class ConvergenceFailure(OscintError):
    """Root finder failed to converge."""


class IllConditionedPair(OscintError):
    """No asymptotic sample pair with a usable extraction denominator."""


class SingularOrigin(OscintError):
    """Centrifugal term evaluated at x = 0 with l > 0."""
