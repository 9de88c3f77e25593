"""Exception types shared across the package."""

from __future__ import annotations


class CyclepackError(Exception):
    """Base class for all package errors."""


class GraphError(CyclepackError, ValueError):
    """Invalid graph construction or a reference to a missing vertex/edge."""


class ParseError(CyclepackError, ValueError):
    """Malformed edge-list or DOT input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardExceeded(CyclepackError, RuntimeError):
    """A configurable resource cap was hit during an exponential search."""

    def __init__(self, what: str, limit: int):
        self.what = what
        self.limit = limit
        super().__init__(f"{what} exceeded the cap of {limit}")
