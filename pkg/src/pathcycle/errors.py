"""Shared exception types."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph or terminal-set text input.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UndecidedAtScaleError(RuntimeError):
    """An exhaustive check was refused because the input exceeds its bound.

    Distinct from a pass/fail outcome: the question was not decided.
    """
