"""Exception hierarchy shared by every matchflow module."""


class MatchflowError(Exception):
    """Base class for all errors raised by matchflow."""


class GraphError(MatchflowError, ValueError):
    """Malformed graph: loops, multi-edges, duplicate labels."""


class NotFoundError(MatchflowError, KeyError):
    """A vertex label is not present in the graph."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "vertex not found"


class InvalidPairError(MatchflowError, ValueError):
    """A distinguished vertex pair is degenerate or not in the graph."""


class IllegalCrossEdgeError(GraphError):
    """A glued block tries to add a new edge between two existing vertices."""


class DimensionError(MatchflowError, ValueError):
    """Series, vectors or matrices with different truncation bounds were combined."""


class TooLargeError(MatchflowError, ValueError):
    """Input exceeds the size a brute-force routine accepts."""


class InvalidSetsError(MatchflowError, ValueError):
    """Neighbour classes passed to an aggregator overlap or leave the graph."""


class InvalidProfileError(MatchflowError, ValueError):
    """An attach/output configuration that no transfer template covers."""


class ChainValidationError(MatchflowError, ValueError):
    """A chain failed validation; ``diagnostics`` holds the individual findings."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"invalid chain: {lines}")
