"""Exception types shared across the package."""

from __future__ import annotations


class InvalidSpecError(ValueError):
    """Raised when inputs violate an invariant (bad bidegrees, codimension,
    negative twist, composite prime, ...)."""


class NotAcmError(ValueError):
    """Raised when an operation requires the arithmetically Cohen-Macaulay
    property and the given intersection pattern fails it."""
