# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------


class GraphentError(Exception):
    """Base class for every error raised by graphent."""


# input parsing ---------------------------------------------------------------

class GraphInputError(GraphentError, ValueError):
    pass


class MalformedTokenError(GraphInputError):
    pass


class LoopEdgeError(GraphInputError):
    pass


class NegativeIndexError(GraphInputError):
    pass


class ContradictoryArcsError(GraphInputError):
    pass


class Graph6Error(GraphInputError):
    pass


class ByteRangeError(Graph6Error):
    pass


class TruncatedGraph6Error(Graph6Error):
    pass


class TrailingBytesError(Graph6Error):
    pass


class UnsupportedOrderError(Graph6Error):
    pass


# unmet preconditions ---------------------------------------------------------

class HypothesisError(GraphentError):
    """A measure or identity is undefined for the given graph."""


class DisconnectedGraphError(HypothesisError):
    pass


class EmptyEdgeSetError(HypothesisError):
    pass


class NotOrientedError(HypothesisError):
    pass


class IsolatedVertexError(HypothesisError):
    pass


class ZeroSpectrumError(HypothesisError):
    pass


class AllZeroWeightsError(HypothesisError):
    pass


# matrices and numerics -------------------------------------------------------

class MatrixError(GraphentError, ValueError):
    pass


class NonSymmetricError(MatrixError):
    pass


class NonSkewError(MatrixError):
    pass


class NumericalError(GraphentError, ArithmeticError):
    pass


class NoConvergenceError(NumericalError):
    pass


class NegativeEigenvalueError(NumericalError):
    pass


# parameters ------------------------------------------------------------------

class ParameterError(GraphentError, ValueError):
    pass


class AlphaOneError(ParameterError):
    pass


class AlphaNonPositiveError(ParameterError):
    pass


class RangeError(ParameterError):
    pass
