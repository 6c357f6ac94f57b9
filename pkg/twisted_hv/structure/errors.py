"""Errors raised by the structure computations."""

from ..errors import HVError


class NonVacuumError(HVError, ValueError):
    """Raised when an operation defined on the vacuum module gets another module's vector."""


class PreconditionError(HVError, ValueError):
    """Raised when parameters violate a documented precondition (e.g. l3 = 0)."""


class AsymmetricGramError(HVError):
    """Raised when a Gram matrix that should be symmetric is not.

    Symmetry of the contravariant form holds for real parameters with l2 = 0;
    positivity is only decided under that precondition.
    """
