"""Exception taxonomy shared across the package.

ValidationError covers bad inputs: malformed files, violated preconditions,
unknown catalog names.  TheoremViolationError is reserved for diagnostic
postcondition failures, where a computed invariant lands outside the set a
structural law guarantees; these indicate an inconsistent form/matrix pair,
not a user mistake, and are surfaced loudly instead of being silently fixed.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """Input violates a documented precondition or file format."""


class ParseError(ValidationError):
    """Structured text file could not be parsed; message carries a line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TheoremViolationError(RuntimeError):
    """A computed invariant violates a structural law it is guaranteed to satisfy."""
