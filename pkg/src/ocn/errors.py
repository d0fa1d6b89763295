"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class OcnError(Exception):
    """Base class for every error raised by this package."""


class NotOrientedError(OcnError, ValueError):
    """Raised when a digraph has a pair of opposite arcs."""


class CyclicGraphError(OcnError, ValueError):
    """Raised when an operation needs an acyclic digraph."""


class PreconditionError(OcnError, ValueError):
    """Raised when an input falls outside the class an engine accepts."""


class SizeLimitError(OcnError):
    """Raised when an exponential routine is asked to run past its size guard."""


class ExpressionError(OcnError, ValueError):
    """Malformed expression tree (bad label, duplicate leaf, ...)."""


class ParseError(ExpressionError):
    """Syntax error in an expression or graph file, with its position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")
