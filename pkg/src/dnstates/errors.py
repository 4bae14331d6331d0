"""Exception types shared across the library."""


class DnstatesError(Exception):
    """Base class for all library-specific errors."""


class DomainError(DnstatesError, ValueError):
    """Parameter outside the valid domain of an operation."""


class DimensionMismatchError(DnstatesError, ValueError):
    """Matrix dimension inconsistent with the algebra label."""


class TruncationError(DnstatesError, RuntimeError):
    """Fock-space truncation too small for the requested tolerance."""


class PrecisionLossError(DnstatesError, ArithmeticError):
    """Alternating-sum cancellation exceeded the trusted range."""


class UndefinedQError(DnstatesError, ArithmeticError):
    """Mandel Q requested for a state with zero mean photon number."""


class SingularCouplingError(DnstatesError, ValueError):
    """Interaction coupling diverges (cos 2r too close to zero)."""
