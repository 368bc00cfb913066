# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

import numpy as np

from ._graph import Graph, distances
from ._matrices import (INCIDENCE, SIGNLESS_LAPLACIAN, AnyGraph, MatrixKind,
                        _require_edges, _resolve, general_randic,
                        graph_spectrum)
from ._spectra import Spectrum, _clamp


def first_zagreb(g: Graph) -> float:
    return float(sum(d * d for d in g.degrees))


def general_randic_index(g: Graph, beta: float) -> float:
    """Sum over edges of (d_i d_j)^beta."""
    d = g.degrees
    return math.fsum((d[u] * d[v]) ** beta for u, v in g.edges)


@dataclass(frozen=True)
class DistanceMoments:
    """Distance moments with the half-sum convention
    W_k = 1/2 * sum_{i<j} d_ij^k, so W here is half the usual Wiener index.
    """
    moments: Dict[int, float] = field(default_factory=dict)

    @property
    def wiener(self) -> float:
        return self.moments[1]

    @property
    def hyper_wiener(self) -> float:
        return 0.5 * (self.moments[2] + self.moments[1])

    def __getitem__(self, k: int) -> float:
        return self.moments[k]


def distance_moments(g: Graph, ks: Iterable[int] = ()) -> DistanceMoments:
    table = distances(g).distances
    upper = table[np.triu_indices(g.n, k=1)].astype(float)
    wanted = sorted({1, 2, *ks})
    return DistanceMoments(
        {k: 0.5 * math.fsum(upper ** k) for k in wanted})


def energy(kind: MatrixKind, g: AnyGraph,
           spectrum: Optional[Spectrum] = None) -> float:
    """Sum of absolute eigenvalues (singular values for incidence kinds).

    The incidence energy is taken as the sum of sqrt(q_i) over the signless
    Laplacian spectrum; pass that spectrum to reuse it. Like the incidence
    matrix itself it is undefined without edges.
    """
    if kind == INCIDENCE:
        graph = _resolve(kind, g)[0]
        _require_edges(kind, graph)
        q = spectrum if spectrum is not None else graph_spectrum(
            SIGNLESS_LAPLACIAN, graph)
        return math.fsum(np.sqrt(_clamp(q.values)))
    s = spectrum if spectrum is not None else graph_spectrum(kind, g)
    return math.fsum(s.absolute)


def adjacency_energy(g: Graph) -> float:
    return energy(general_randic(0.0), g)
