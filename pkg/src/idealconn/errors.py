"""Exception hierarchy shared by all modules."""


class GraphError(ValueError):
    """Base class for every error raised by idealconn."""


class Graph6Error(GraphError):
    """Malformed graph6 input. ``offset`` is the index of the offending byte."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(GraphError):
    pass


class DomainError(GraphError):
    """An argument lies outside the domain of the operation."""


class ValidationError(GraphError):
    """A certificate or structure handed in by the caller is invalid."""


class PreconditionError(GraphError):
    """The input is not in the class the operation requires.

    ``witness`` carries the forbidden structure that proves it (for example
    the four vertices of an induced P4).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceError(GraphError):
    """The requested enumeration exceeds the supported desk-scale bound."""


class ConsistencyError(GraphError):
    """An internal cross-check failed; this signals a bug, not bad input."""
