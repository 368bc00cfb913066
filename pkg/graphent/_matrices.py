# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ._errors import (EmptyEdgeSetError, GraphentError, NotOrientedError,
                      NumericalError, ParameterError)
from ._graph import Graph, OrientedGraph, distances
from ._spectra import (DenseMatrix, Spectrum, SpectrumKind,
                       batch_singular_values, batch_symmetric_eigenvalues,
                       singular_values, skew_absolute_eigenvalues,
                       symmetric_eigenvalues)

AnyGraph = Union[Graph, OrientedGraph]


class MatrixTag(Enum):
    SIGNLESS_LAPLACIAN = 'q'
    NORMALIZED_LAPLACIAN = 'norm-l'
    NORMALIZED_SIGNLESS_LAPLACIAN = 'norm-q'
    INCIDENCE = 'incidence'
    DISTANCE = 'distance'
    SKEW_ADJACENCY = 'skew'
    RANDIC_ADJACENCY = 'randic'
    RANDIC_INCIDENCE = 'randic-incidence'
    GENERAL_RANDIC = 'general-randic'
    SKEW_RANDIC = 'skew-randic'


_ORIENTED = {MatrixTag.SKEW_ADJACENCY, MatrixTag.SKEW_RANDIC}
_INCIDENCE = {MatrixTag.INCIDENCE, MatrixTag.RANDIC_INCIDENCE}


@dataclass(frozen=True)
class MatrixKind:
    tag: MatrixTag
    beta: Optional[float] = None

    def __post_init__(self):
        if self.tag is MatrixTag.GENERAL_RANDIC:
            if self.beta is None or not math.isfinite(self.beta):
                raise ParameterError(
                    "The general Randic matrix needs a finite exponent.")
            object.__setattr__(self, 'beta', float(self.beta))
        elif self.beta is not None:
            raise ParameterError(f"{self.tag.value} takes no exponent.")

    @classmethod
    def parse(cls, text: str) -> 'MatrixKind':
        name, _, beta = text.strip().partition(':')
        try:
            tag = MatrixTag(name)
        except ValueError:
            raise ParameterError(f"Unknown matrix kind {text!r}.") from None
        if tag is MatrixTag.GENERAL_RANDIC:
            try:
                return cls(tag, float(beta))
            except ValueError:
                raise ParameterError(
                    f"Expected general-randic:<beta>, got {text!r}.") \
                    from None
        if beta:
            raise ParameterError(f"{name} takes no exponent ({text!r}).")
        return cls(tag)

    def __str__(self):
        if self.tag is MatrixTag.GENERAL_RANDIC:
            return f"{self.tag.value}:{self.beta:g}"
        return self.tag.value

    @property
    def oriented(self) -> bool:
        return self.tag in _ORIENTED

    @property
    def spectrum_kind(self) -> SpectrumKind:
        if self.tag in _INCIDENCE:
            return SpectrumKind.SINGULAR_VALUES
        if self.tag in _ORIENTED:
            return SpectrumKind.ABSOLUTE_EIGENVALUES
        return SpectrumKind.EIGENVALUES


SIGNLESS_LAPLACIAN = MatrixKind(MatrixTag.SIGNLESS_LAPLACIAN)
NORMALIZED_LAPLACIAN = MatrixKind(MatrixTag.NORMALIZED_LAPLACIAN)
NORMALIZED_SIGNLESS_LAPLACIAN = MatrixKind(
    MatrixTag.NORMALIZED_SIGNLESS_LAPLACIAN)
INCIDENCE = MatrixKind(MatrixTag.INCIDENCE)
DISTANCE = MatrixKind(MatrixTag.DISTANCE)
SKEW_ADJACENCY = MatrixKind(MatrixTag.SKEW_ADJACENCY)
RANDIC_ADJACENCY = MatrixKind(MatrixTag.RANDIC_ADJACENCY)
RANDIC_INCIDENCE = MatrixKind(MatrixTag.RANDIC_INCIDENCE)
SKEW_RANDIC = MatrixKind(MatrixTag.SKEW_RANDIC)


def general_randic(beta: float) -> MatrixKind:
    return MatrixKind(MatrixTag.GENERAL_RANDIC, beta)


def all_kinds(betas: Sequence[float] = (-1.0, -0.5, 1.0)) -> List[MatrixKind]:
    kinds = [SIGNLESS_LAPLACIAN, NORMALIZED_LAPLACIAN,
             NORMALIZED_SIGNLESS_LAPLACIAN, INCIDENCE, DISTANCE,
             SKEW_ADJACENCY, RANDIC_ADJACENCY, RANDIC_INCIDENCE]
    kinds.extend(general_randic(b) for b in betas)
    kinds.append(SKEW_RANDIC)
    return kinds


# support matrices -------------------------------------------------------------

def degree_vector(g: Graph) -> np.ndarray:
    return np.asarray(g.degrees, dtype=float)


def degree_product_weights(g: Graph, beta: float) -> np.ndarray:
    """(d_i d_j)^beta on every edge, 0 elsewhere."""
    d = degree_vector(g)
    product = np.outer(d, d)
    powered = np.power(product, beta, out=np.zeros_like(product),
                       where=product > 0)
    return g.adjacency * powered


def inverse_sqrt_degrees(g: Graph) -> np.ndarray:
    # isolated vertices get 0, so they contribute zero rows and columns
    d = degree_vector(g)
    out = np.zeros_like(d)
    np.divide(1.0, np.sqrt(d), out=out, where=d > 0)
    return out


def incidence_matrix(g: Graph) -> np.ndarray:
    out = np.zeros((g.n, g.m))
    for k, (u, v) in enumerate(g.edge_list):
        out[u, k] = out[v, k] = 1.0
    return out


def skew_adjacency_matrix(g: OrientedGraph) -> np.ndarray:
    out = np.zeros((g.n, g.n))
    for u, v in g.arcs:
        out[u, v] = 1.0
        out[v, u] = -1.0
    return out


def _resolve(kind: MatrixKind, g: AnyGraph) -> Tuple[Graph, OrientedGraph]:
    if kind.oriented:
        if not isinstance(g, OrientedGraph):
            raise NotOrientedError(f"{kind} needs an oriented graph.")
        return g.underlying, g
    if isinstance(g, OrientedGraph):
        return g.underlying, None
    return g, None


def _require_edges(kind: MatrixKind, g: Graph):
    if g.m == 0:
        raise EmptyEdgeSetError(f"{kind} is undefined for an edgeless graph.")


def build(kind: MatrixKind, g: AnyGraph) -> DenseMatrix:
    graph, oriented = _resolve(kind, g)
    tag = kind.tag
    if tag is MatrixTag.SIGNLESS_LAPLACIAN:
        return DenseMatrix.symmetric(
            np.diag(degree_vector(graph)) + graph.adjacency)
    if tag in (MatrixTag.NORMALIZED_LAPLACIAN,
               MatrixTag.NORMALIZED_SIGNLESS_LAPLACIAN):
        identity = np.diag((degree_vector(graph) > 0).astype(float))
        randic = degree_product_weights(graph, -0.5)
        sign = -1.0 if tag is MatrixTag.NORMALIZED_LAPLACIAN else 1.0
        return DenseMatrix.symmetric(identity + sign * randic)
    if tag is MatrixTag.INCIDENCE:
        _require_edges(kind, graph)
        return DenseMatrix(incidence_matrix(graph))
    if tag is MatrixTag.DISTANCE:
        return DenseMatrix.symmetric(
            distances(graph).distances.astype(float))
    if tag is MatrixTag.SKEW_ADJACENCY:
        return DenseMatrix.skew(skew_adjacency_matrix(oriented))
    if tag is MatrixTag.RANDIC_ADJACENCY:
        return DenseMatrix.symmetric(degree_product_weights(graph, -0.5))
    if tag is MatrixTag.RANDIC_INCIDENCE:
        _require_edges(kind, graph)
        scaled = inverse_sqrt_degrees(graph)[:, None] * incidence_matrix(graph)
        return DenseMatrix(scaled)
    if tag is MatrixTag.GENERAL_RANDIC:
        return DenseMatrix.symmetric(degree_product_weights(graph, kind.beta))
    if tag is MatrixTag.SKEW_RANDIC:
        weights = degree_product_weights(graph, -0.5)
        return DenseMatrix.skew(skew_adjacency_matrix(oriented) * weights)
    raise ParameterError(f"Unhandled matrix kind {kind}.")


# spectra per kind ------------------------------------------------------------

def _spectrum_of(kind: MatrixKind, matrix: DenseMatrix) -> Spectrum:
    source = str(kind)
    if kind.spectrum_kind is SpectrumKind.SINGULAR_VALUES:
        return singular_values(matrix, pad_to=matrix.rows, source=source)
    if kind.spectrum_kind is SpectrumKind.ABSOLUTE_EIGENVALUES:
        return skew_absolute_eigenvalues(matrix, source=source)
    return symmetric_eigenvalues(matrix, source=source)


def graph_spectrum(kind: MatrixKind, g: AnyGraph) -> Spectrum:
    return _spectrum_of(kind, build(kind, g))


def graph_spectra(kind: MatrixKind, graphs: Sequence[AnyGraph],
                  collect_errors: bool = False
                  ) -> List[Union[Spectrum, GraphentError]]:
    """graph_spectrum over many graphs, batching equally shaped matrices
    through one Jacobi run.

    With ``collect_errors`` a graph whose matrix or spectrum fails gets the
    raised error in its slot instead of aborting the batch.
    """
    out: List[Union[Spectrum, GraphentError, None]] = [None] * len(graphs)
    groups = defaultdict(list)
    matrices = {}
    for index, g in enumerate(graphs):
        try:
            matrices[index] = build(kind, g)
        except GraphentError as error:
            if not collect_errors:
                raise
            out[index] = error
            continue
        groups[matrices[index].entries.shape].append(index)
    for shape, indices in groups.items():
        stack = np.stack([matrices[i].entries for i in indices])
        try:
            if kind.spectrum_kind is SpectrumKind.EIGENVALUES:
                values = batch_symmetric_eigenvalues(stack)
            else:
                values = batch_singular_values(stack, pad_to=shape[0])
        except NumericalError:
            if not collect_errors:
                raise
            # retry one by one
            for i in indices:
                try:
                    out[i] = _spectrum_of(kind, matrices[i])
                except GraphentError as error:
                    out[i] = error
            continue
        for i, row in zip(indices, values):
            out[i] = Spectrum(row, kind.spectrum_kind, str(kind))
    return out
