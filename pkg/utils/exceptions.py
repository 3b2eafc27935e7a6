"""Exception hierarchy for the extremal realization toolkit"""

from typing import Any, Optional


class ExtremalRealizationError(Exception):
    """Base class for every error raised by this package"""


# Graph construction and parsing

class GraphError(ExtremalRealizationError):
    """Invalid graph input"""


class DisconnectedGraph(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class BadIndex(GraphError):
    pass


class NegativePhi(GraphError):
    pass


class LengthMismatch(GraphError):
    pass


class UnknownFamily(GraphError):
    pass


class BadParam(GraphError):
    pass


class GraphFileError(GraphError):
    """Graph JSON file could not be read or parsed"""


# Linear algebra and solver

class NoConvergence(ExtremalRealizationError):
    """Iteration cap exceeded; `best` holds the best iterate reached, if any"""

    def __init__(self, message: str, best: Optional[Any] = None):
        super().__init__(message)
        self.best = best


class NotPositiveDefinite(ExtremalRealizationError):
    """A nonpositive pivot was met while factoring a matrix"""


class StepRejected(ExtremalRealizationError):
    """A trial barrier step left the interior of the feasible cone"""


class Infeasible(ExtremalRealizationError):
    pass


# Realization extraction

class EmptyEigenspace(ExtremalRealizationError):
    pass


class InfeasibleRefinement(ExtremalRealizationError):
    """The Gram refinement constraints have no solution on the grouped eigenspace"""


# Certification

class DimensionMismatch(ExtremalRealizationError):
    pass


class InfeasibleInput(ExtremalRealizationError):
    pass


# Output

class OutputError(ExtremalRealizationError):
    """Writing a result or figure failed"""


class InputFileError(ExtremalRealizationError):
    """A weights or coordinates file could not be read"""
