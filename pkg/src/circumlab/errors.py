"""Exception hierarchy shared by every circumlab module."""

from __future__ import annotations


class CircumlabError(Exception):
    """Base class for all errors raised by circumlab."""


# graph-core

class GraphError(CircumlabError, ValueError):
    pass


class IndexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class TooLarge(GraphError):
    pass


class MalformedToken(GraphError):
    pass


# search budgets

class ResourceLimit(CircumlabError):
    """An exact search exceeded its budget.

    ``partial`` carries how far the search got (paths yielded, nodes
    visited...) so the caller can report it instead of truncating silently.
    """

    def __init__(self, message: str, partial: int = 0):
        super().__init__(message)
        self.partial = partial


# degree conditions

class ChainViolation(CircumlabError):
    """The monotone chain of degree conditions broke: an implementation bug."""


# constructive prover

class ProofStepError(CircumlabError):
    """A step of the constructive proof did not deliver what it promised.

    ``state`` holds the intermediate objects for diagnostics.
    """

    def __init__(self, message: str, state: dict | None = None):
        super().__init__(message)
        self.state = state or {}


class NotLongestPath(ProofStepError):
    pass


class InequalityViolated(ProofStepError):
    pass


class NoVineFound(ProofStepError):
    pass


class ConstructionInvalid(ProofStepError):
    pass


class ProofGapViolated(ProofStepError):
    pass


class NotTwoConnected(CircumlabError):
    def __init__(self, message: str, kappa: int, cut_vertex: int | None):
        super().__init__(message)
        self.kappa = kappa
        self.cut_vertex = cut_vertex


class ConditionNotSatisfied(CircumlabError):
    pass


# extremal families

class DeltaTooSmall(CircumlabError, ValueError):
    pass
