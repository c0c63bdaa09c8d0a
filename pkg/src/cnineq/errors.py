"""Exception types shared across the package."""


class CnineqError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CnineqError, ValueError):
    """Malformed edge-list input. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UsageError(CnineqError, ValueError):
    """An argument violates an operation's precondition (bad vertex, u == v, ...)."""


class DomainError(CnineqError, ValueError):
    """The input graph falls outside the operation's domain, e.g. it is disconnected."""


class ResourceError(CnineqError, RuntimeError):
    """A named size or enumeration cap was exceeded."""
