# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ._catalog import INDEX_MEASURES, evaluate, parse_measure
from ._entropy import (LogBase, entropy_i1, entropy_i2, entropy_i3,
                       probabilities_from_spectrum)
from ._errors import GraphentError
from ._graph import OrientedGraph, random_orientation
from ._io import describe
from ._matrices import AnyGraph, MatrixKind, all_kinds, graph_spectrum
from ._measures import energy
from ._verify import DEFAULT_ALPHAS, DEFAULT_BETAS

logger = logging.getLogger(__name__)


@dataclass
class KindMeasures:
    kind: str
    graph: str
    spectrum: Optional[Tuple[float, ...]] = None
    energy: Optional[float] = None
    i1: Optional[float] = None
    i2: Dict[float, float] = field(default_factory=dict)
    i3: Dict[float, float] = field(default_factory=dict)
    error: Optional[str] = None


@dataclass
class MeasureReport:
    graph: str
    n: int
    m: int
    log_base: str
    alphas: Tuple[float, ...]
    indices: Dict[str, Optional[float]]
    kinds: List[KindMeasures]
    measures: Dict[str, Optional[float]] = field(default_factory=dict)


def _target(kind: MatrixKind, g: AnyGraph, seed: int) -> AnyGraph:
    if not kind.oriented:
        return g.underlying if isinstance(g, OrientedGraph) else g
    if isinstance(g, OrientedGraph):
        return g
    return random_orientation(g, seed)


def _kind_measures(kind: MatrixKind, g: AnyGraph, alphas: Sequence[float],
                   log_base: LogBase, seed: int,
                   strict: bool) -> KindMeasures:
    target = _target(kind, g, seed)
    out = KindMeasures(str(kind), describe(target))
    try:
        spectrum = graph_spectrum(kind, target)
        out.spectrum = tuple(float(v) for v in spectrum.values)
        out.energy = energy(kind, target)
        p = probabilities_from_spectrum(spectrum, log_base)
        out.i1 = entropy_i1(p)
        for alpha in alphas:
            out.i2[alpha] = entropy_i2(p, alpha)
            out.i3[alpha] = entropy_i3(p, alpha)
    except GraphentError as error:
        if strict:
            raise
        logger.info("%s: %s", kind, error)
        out.error = f"{type(error).__name__}: {error}"
    return out


def _optional(measure_id: str, g: AnyGraph, log_base: LogBase, seed: int,
              strict: bool) -> Optional[float]:
    measure = parse_measure(measure_id)
    target = _target(measure.kind, g, seed) if measure.kind else g
    try:
        return evaluate(measure, target, log_base)
    except GraphentError as error:
        if strict:
            raise
        logger.info("%s: %s", measure_id, error)
        return None


def _base_label(log_base: LogBase) -> str:
    return log_base if isinstance(log_base, str) else format(log_base, 'g')


def compute_report(g: AnyGraph, kinds: Optional[Sequence[MatrixKind]] = None,
                   alphas: Sequence[float] = DEFAULT_ALPHAS,
                   log_base: LogBase = 2.0, seed: int = 0,
                   measures: Sequence[str] = (),
                   betas: Sequence[float] = DEFAULT_BETAS,
                   strict: bool = False) -> MeasureReport:
    """Indices, spectra, energies and entropies of one graph.

    With ``strict`` the first undefined quantity raises; otherwise it is
    recorded as missing.
    """
    kinds = list(kinds) if kinds else all_kinds(betas)
    graph = g.underlying if isinstance(g, OrientedGraph) else g
    indices = {name: _optional(name, graph, log_base, seed, False)
               for name in INDEX_MEASURES}
    return MeasureReport(
        describe(g), graph.n, graph.m, _base_label(log_base), tuple(alphas),
        indices,
        [_kind_measures(k, g, alphas, log_base, seed, strict) for k in kinds],
        {name: _optional(name, g, log_base, seed, strict)
         for name in measures})
