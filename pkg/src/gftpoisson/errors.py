"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """A parameter or evaluation point is outside its valid domain."""


class TruncationNotReached(RuntimeError):
    """The tail-bound target could not be met within the order cap."""


class MissingRParams(ValueError):
    """A predicate that needs (A, B, tau) was invoked without them."""


class InvalidTolerance(ValueError):
    """A solver tolerance is zero, negative, or not finite."""
