"""Exception types for mathematical precondition failures."""


class ExactRealError(Exception):
    """Base class for precondition failures in exact computations."""


class NonSymmetricMatrixError(ExactRealError):
    pass


class NotNormalMatrixError(ExactRealError):
    pass


class SingularMatrixError(ExactRealError):
    pass


class NotPositiveDefiniteError(ExactRealError):
    pass


class DegenerateCoefficientError(ExactRealError):
    """A coefficient matrix required to be non-degenerate is singular."""


class NoDeterminacyDomainError(ExactRealError):
    """The hyperbolic problem has no compact determinacy domain."""
