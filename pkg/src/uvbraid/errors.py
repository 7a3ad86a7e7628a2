"""Exception types shared across the package."""

from __future__ import annotations


class BraidError(ValueError):
    """Base class for user-facing errors."""


class ParseError(BraidError):
    """Malformed input text."""


class DomainError(BraidError):
    """Well-formed input outside an operation's domain (e.g. vlk of a non-pure braid)."""


class PurifyConsistencyError(RuntimeError):
    """Raised when purification meets a state its invariants rule out."""
