"""Exception hierarchy shared by all matchpose modules."""

from __future__ import annotations


class MatchposeError(Exception):
    """Base class for every error raised by this package."""


class GraphError(MatchposeError, ValueError):
    """Invalid graph construction or graph-level argument."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered pair appears twice in an edge list."""


class VertexRangeError(GraphError):
    """A vertex id is outside 0..n-1."""


class EmptySetError(GraphError):
    """An operation requires a nonempty vertex set."""


class NotAPathError(GraphError):
    """A vertex sequence is not a simple path of the host graph."""


class MatchingError(MatchposeError, ValueError):
    """Invalid matching construction or matching-level argument."""


class NotPerfectError(MatchingError):
    """A perfect matching was required."""


class NotNearPerfectError(MatchingError):
    """A near-perfect matching (exactly one exposed vertex) was required."""


class RootNotExposedError(MatchingError):
    """The requested search root is covered by the matching."""


class DifferentComponentsError(MatchposeError, ValueError):
    """Two vertices were required to lie in the same factor-component."""


class InconsistentDecompositionError(MatchposeError):
    """A decomposition or partition failed an internal consistency check."""


class NotFactorizableError(MatchposeError):
    """The graph has no perfect matching."""


class TooLargeError(MatchposeError):
    """An instance exceeds the configured brute-force size bound."""


class PreconditionViolatedError(MatchposeError, ValueError):
    """Arguments violate a documented operation precondition."""


class NotFoundError(MatchposeError):
    """An exhaustive search found no witness (indicates a bad precondition)."""


class ParseError(MatchposeError, ValueError):
    """A graph file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
