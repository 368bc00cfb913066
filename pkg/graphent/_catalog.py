# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

"""Textual measure ids and their evaluators.

    m1                    first Zagreb index
    randic-index:<beta>   general Randic index R_beta
    wiener, hyper-wiener  W and WW (half-sum convention)
    wk:<k>                k-th distance moment
    energy:<kind>         energy of a matrix kind
    i1:<kind>             I1 along the spectral route
    i2:<kind>@<alpha>     I2 (alpha defaults to 2)
    i3:<kind>@<alpha>     I3 (alpha defaults to 2)
    degree-entropy        Shannon entropy of the degree functional
"""

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from ._entropy import (LogBase, check_alpha, degree_weights, entropy_i1,
                       entropy_i2, entropy_i3, functional_entropy,
                       probabilities_from_spectrum)
from ._errors import ParameterError
from ._graph import Graph
from ._matrices import (INCIDENCE, SIGNLESS_LAPLACIAN, AnyGraph, MatrixKind,
                        _resolve, graph_spectra)
from ._measures import (distance_moments, energy, first_zagreb,
                        general_randic_index)

DEFAULT_ALPHA = 2.0


@dataclass(frozen=True)
class Measure:
    id: str
    kind: Optional[MatrixKind] = None
    family: str = 'index'
    alpha: Optional[float] = None
    scalar: Optional[Callable[[Graph], float]] = None

    @property
    def oriented(self) -> bool:
        return self.kind is not None and self.kind.oriented

    @property
    def spectral(self) -> bool:
        return self.kind is not None


def _parse_float(text: str, measure: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParameterError(f"Bad number {text!r} in measure {measure!r}.") \
            from None
    if not math.isfinite(value):
        raise ParameterError(f"Non-finite number in measure {measure!r}.")
    return value


def parse_measure(text: str) -> Measure:
    text = text.strip()
    if text == 'm1':
        return Measure(text, scalar=first_zagreb)
    if text == 'wiener':
        return Measure(text, scalar=lambda g: distance_moments(g).wiener)
    if text == 'hyper-wiener':
        return Measure(
            text, scalar=lambda g: distance_moments(g).hyper_wiener)
    if text == 'degree-entropy':
        return Measure(
            text, scalar=lambda g: functional_entropy(degree_weights(g)))
    head, sep, rest = text.partition(':')
    if not sep or not rest:
        raise ParameterError(f"Unknown measure {text!r}.")
    if head == 'randic-index':
        beta = _parse_float(rest, text)
        return Measure(text, scalar=lambda g: general_randic_index(g, beta))
    if head == 'wk':
        try:
            k = int(rest)
        except ValueError:
            raise ParameterError(f"wk needs an integer, got {rest!r}.") \
                from None
        if k < 1:
            raise ParameterError(f"wk needs k >= 1, got {k}.")
        return Measure(text, scalar=lambda g: distance_moments(g, (k,))[k])
    if head == 'energy':
        return Measure(text, MatrixKind.parse(rest), 'energy')
    if head in ('i1', 'i2', 'i3'):
        kind_text, at, alpha_text = rest.partition('@')
        kind = MatrixKind.parse(kind_text)
        if head == 'i1':
            if at:
                raise ParameterError(f"i1 takes no alpha ({text!r}).")
            return Measure(text, kind, head)
        alpha = check_alpha(
            _parse_float(alpha_text, text) if at else DEFAULT_ALPHA)
        return Measure(text, kind, head, alpha)
    raise ParameterError(f"Unknown measure {text!r}.")


def _underlying(g: AnyGraph) -> Graph:
    return getattr(g, 'underlying', g)


def evaluate(measure: Measure, g: AnyGraph,
             log_base: LogBase = 2.0) -> float:
    return evaluate_many(measure, [g], log_base)[0]


def evaluate_many(measure: Measure, graphs: Sequence[AnyGraph],
                  log_base: LogBase = 2.0) -> List[float]:
    """Evaluates ``measure`` on each graph; spectral measures share one
    batched eigen-solve per matrix shape."""
    if not measure.spectral:
        return [float(measure.scalar(_underlying(g))) for g in graphs]
    kind = measure.kind
    if measure.family == 'energy':
        if kind == INCIDENCE:
            bases = [_resolve(kind, g)[0] for g in graphs]
            spectra = graph_spectra(SIGNLESS_LAPLACIAN, bases)
        else:
            spectra = graph_spectra(kind, graphs)
        return [energy(kind, g, s) for g, s in zip(graphs, spectra)]
    out = []
    for s in graph_spectra(kind, graphs):
        p = probabilities_from_spectrum(s, log_base)
        if measure.family == 'i1':
            out.append(entropy_i1(p))
        elif measure.family == 'i2':
            out.append(entropy_i2(p, measure.alpha))
        else:
            out.append(entropy_i3(p, measure.alpha))
    return out


INDEX_MEASURES = ('m1', 'randic-index:-1', 'wiener', 'hyper-wiener',
                  'degree-entropy')
