"""Exception hierarchy shared by every module."""


class PturError(Exception):
    """Base class for all errors raised by ptur."""


class DimensionMismatch(PturError, ValueError):
    pass


class NotHermitian(PturError, ValueError):
    pass


class NotTwoParticle(PturError, ValueError):
    pass


class DimensionTooSmall(PturError, ValueError):
    pass


class NotOddPrime(PturError, ValueError):
    pass


class NotHermitianSource(PturError, ValueError):
    """A table that should be real came out with a non-negligible imaginary part."""


class NonRealVariance(PturError, ValueError):
    """A variance evaluated on a density-like operator is not real.

    This happens exactly when the operator fails Hermiticity, so the error is
    itself a diagnostic rather than a bug.
    """


class SchemaError(PturError, ValueError):
    pass


class ConsistencyError(PturError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
