"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class SplitoffError(Exception):
    """Base class for all errors raised by :mod:`splitoff`."""


class DomainError(SplitoffError, ValueError):
    """An input violates a documented precondition."""


class ParseError(DomainError):
    """A text file could not be parsed.

    ``line`` and ``column`` are 1-based and point at the offending token.
    """

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InvariantViolation(SplitoffError, RuntimeError):
    """An internal guarantee failed; the input was not what it claimed to be."""


class ResourceLimitError(SplitoffError):
    """An exhaustive oracle was asked to run above its configured size fence."""
