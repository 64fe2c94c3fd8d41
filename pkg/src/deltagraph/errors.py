"""Exception hierarchy shared by every deltagraph module."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all deltagraph errors."""


class InvalidOrder(GraphError, ValueError):
    """Vertex count or family parameter outside the supported range."""


class SelfLoop(GraphError, ValueError):
    pass


class BadVertex(GraphError, IndexError):
    pass


class EmptySelection(GraphError, ValueError):
    pass


class FormatError(GraphError, ValueError):
    """Malformed graph6 / JSON input."""


class NotConnected(GraphError, ValueError):
    pass


class Degenerate(GraphError, ValueError):
    """Invariant undefined on a single-vertex graph."""


class AdjacentPair(GraphError, ValueError):
    pass


class SamePair(GraphError, ValueError):
    pass


class OutOfTheoremRange(GraphError, ValueError):
    """Feasibility is only decided for n >= 8; use the enumeration census below that."""


class NotRealizable(GraphError, ValueError):
    pass


class ConstructionMismatch(GraphError, AssertionError):
    """A witness builder produced a graph whose triple differs from the request."""


class UniverseTooLarge(GraphError, ValueError):
    pass
