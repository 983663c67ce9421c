"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class VassError(Exception):
    """Base class for every error raised by vassred."""


class InvariantViolation(VassError, ValueError):
    """A value was constructed that breaks a structural invariant."""


class NotEnabled(VassError):
    """A transition was fired in a configuration where it cannot fire."""


class ResourceBound(VassError):
    """A bounded search explored more nodes than its budget allows."""

    def __init__(self, limit: int, explored: int):
        super().__init__(f"node budget of {limit} exceeded ({explored} nodes explored)")
        self.limit = limit
        self.explored = explored


class InvalidMachine(VassError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid two-counter machine: {lines}")


class MalformedN(VassError, ValueError):
    """The input does not look like a VASS produced by ``build_n``."""


class PreconditionFailed(VassError):
    pass


class Inconclusive(VassError):
    """Bounded methods cannot settle the question for this machine."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ParseError(VassError, ValueError):
    """Syntax error in one of the text formats; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class ValidationErrors(VassError, ValueError):
    """A parsed counter machine failed validation.

    ``diagnostics`` is a list of ``(line, violation)`` pairs.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        text = "; ".join(
            (f"line {line}: {v}" if line is not None else str(v)) for line, v in self.diagnostics
        )
        super().__init__(text)
