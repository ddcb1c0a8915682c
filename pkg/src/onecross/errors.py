"""Exception types shared across the package."""

from __future__ import annotations


class OnecrossError(Exception):
    """Base class for all library errors."""


class LoopEdge(OnecrossError):
    """An input edge has equal endpoints; loops are not representable."""

    def __init__(self, index: int, vertex: int) -> None:
        super().__init__(f"edge {index} is a loop at vertex {vertex}")
        self.index = index
        self.vertex = vertex


class UnknownEdge(OnecrossError):
    def __init__(self, edge: int) -> None:
        super().__init__(f"edge id {edge} not in graph")
        self.edge = edge


class UnknownVertex(OnecrossError):
    def __init__(self, vertex: int) -> None:
        super().__init__(f"vertex {vertex} not in graph")
        self.vertex = vertex


class NotACycle(OnecrossError):
    """A path argument was expected to be a closed simple cycle."""


class NotPlanarEmbedding(OnecrossError):
    """A rotation system failed the Euler planarity check."""


class SameBridge(OnecrossError):
    """Overlap queries require two distinct bridges."""


class NonPlanarInput(OnecrossError):
    """Operation requires a planar input graph."""


class PlanarInput(OnecrossError):
    """Operation requires a nonplanar input graph."""


class EdgeNotInSubdivision(OnecrossError):
    def __init__(self, edge: int) -> None:
        super().__init__(f"edge id {edge} is not an edge of the subdivision")
        self.edge = edge


class BudgetExceeded(OnecrossError):
    """A bounded search ran out of its step budget."""


class EnumerationBudgetExceeded(BudgetExceeded):
    """Kuratowski enumeration was asked to run beyond its size gate."""


class SearchBudgetExceeded(BudgetExceeded):
    """A path/cycle search exceeded its step budget."""


class InconsistencyDetected(OnecrossError):
    """Two routes that must agree disagreed; aborting loudly is the contract."""


class PreconditionViolated(OnecrossError):
    """Caller invoked an operation whose stated precondition does not hold."""
