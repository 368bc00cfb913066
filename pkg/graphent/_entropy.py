# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np
from scipy.stats import entropy as _scipy_entropy

from ._errors import (AllZeroWeightsError, AlphaNonPositiveError,
                      AlphaOneError, EmptyEdgeSetError, IsolatedVertexError,
                      NumericalError, ParameterError, ZeroSpectrumError)
from ._graph import Graph
from ._matrices import (INCIDENCE, SIGNLESS_LAPLACIAN, AnyGraph, MatrixKind,
                        MatrixTag, _resolve, graph_spectrum)
from ._measures import (distance_moments, energy, first_zagreb,
                        general_randic_index)
from ._spectra import Spectrum, _clamp

SUM_TOLERANCE = 1e-12

LogBase = Union[float, str]


def resolve_log_base(base: LogBase) -> float:
    """Accepts a positive real other than 1, or the string ``'e'``."""
    if isinstance(base, str):
        text = base.strip().lower()
        if text == 'e':
            return math.e
        try:
            base = float(text)
        except ValueError:
            raise ParameterError(f"Bad logarithm base {base!r}.") from None
    base = float(base)
    if not math.isfinite(base) or base <= 0 or base == 1.0:
        raise ParameterError(
            f"The logarithm base must be a positive real other than 1, "
            f"got {base}.")
    return base


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha <= 0:
        raise AlphaNonPositiveError(f"alpha must be positive, got {alpha}.")
    if alpha == 1.0:
        raise AlphaOneError("alpha = 1 is excluded; use shannon_entropy.")
    return alpha


@dataclass(frozen=True)
class ProbabilityVector:
    p: np.ndarray
    origin: str = ''
    log_base: float = 2.0

    def __post_init__(self):
        p = np.array(self.p, dtype=float).ravel()
        if p.size == 0:
            raise ParameterError("A probability vector needs an entry.")
        if not np.all(np.isfinite(p)) or np.any(p < 0):
            raise ParameterError("Probabilities must be finite and >= 0.")
        total = math.fsum(p)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ParameterError(
                f"Probabilities sum to {total!r}, not 1.")
        p.setflags(write=False)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'log_base', resolve_log_base(self.log_base))

    @classmethod
    def from_weights(cls, weights: Sequence[float], origin: str = '',
                     log_base: LogBase = 2.0) -> 'ProbabilityVector':
        w = np.asarray(weights, dtype=float)
        total = math.fsum(w)
        if total <= 0:
            raise AllZeroWeightsError("Weights sum to zero.")
        return cls(w / total, origin, log_base)

    def __len__(self):
        return self.p.size


def probabilities_from_spectrum(s: Spectrum,
                                log_base: LogBase = 2.0
                                ) -> ProbabilityVector:
    magnitudes = s.absolute
    total = math.fsum(magnitudes)
    if total == 0:
        raise ZeroSpectrumError(
            f"Every {s.source or 'spectral'} value is zero.")
    return ProbabilityVector(magnitudes / total, f"spectral({s.source})",
                             log_base)


def _power_sum(p: np.ndarray, alpha: float) -> float:
    # 0^alpha := 0
    return math.fsum(p[p > 0] ** alpha)


def entropy_i1(p: ProbabilityVector) -> float:
    return 1.0 - math.fsum(p.p * p.p)


def entropy_i2(p: ProbabilityVector, alpha: float) -> float:
    alpha = check_alpha(alpha)
    return math.log(_power_sum(p.p, alpha), p.log_base) / (1.0 - alpha)


def entropy_i3(p: ProbabilityVector, alpha: float) -> float:
    alpha = check_alpha(alpha)
    return (_power_sum(p.p, alpha) - 1.0) / (2.0 ** (1.0 - alpha) - 1.0)


def shannon_entropy(p: ProbabilityVector) -> float:
    return float(_scipy_entropy(p.p, base=p.log_base))


def functional_entropy(weights: Sequence[float],
                       log_base: LogBase = 2.0) -> float:
    """Shannon entropy of the normalized vertex weights."""
    w = np.asarray(weights, dtype=float)
    if w.size == 0 or np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ParameterError("Weights must be finite and non-negative.")
    if not np.any(w > 0):
        raise AllZeroWeightsError("Every vertex weight is zero.")
    return float(_scipy_entropy(w, base=resolve_log_base(log_base)))


def degree_weights(g: Graph) -> np.ndarray:
    return np.asarray(g.degrees, dtype=float)


# closed forms ----------------------------------------------------------------

class Entropies(NamedTuple):
    i1: float
    i2: float
    i3: float


def _needs_edges(kind: MatrixKind, g: Graph):
    if g.m == 0:
        raise EmptyEdgeSetError(
            f"The {kind} closed form needs at least one edge.")


def _index_terms(kind: MatrixKind, g: Graph):
    """(sum of squared spectral magnitudes, trace sum) from indices alone,
    where the trace sum is fixed by the graph and None when it is the
    kind's energy."""
    tag = kind.tag
    if tag is MatrixTag.SIGNLESS_LAPLACIAN:
        _needs_edges(kind, g)
        return first_zagreb(g) + 2 * g.m, 2.0 * g.m
    if tag in (MatrixTag.NORMALIZED_LAPLACIAN,
               MatrixTag.NORMALIZED_SIGNLESS_LAPLACIAN):
        if g.non_isolated != g.n:
            raise IsolatedVertexError(
                f"The {kind} closed form needs every vertex to have an "
                f"edge.")
        return g.n + 2.0 * general_randic_index(g, -1.0), float(g.n)
    if tag is MatrixTag.INCIDENCE:
        _needs_edges(kind, g)
        return 2.0 * g.m, None
    if tag is MatrixTag.DISTANCE:
        if g.n == 1:
            raise ZeroSpectrumError("The distance matrix of K1 is zero.")
        moments = distance_moments(g)
        return 4.0 * (2.0 * moments.hyper_wiener - moments.wiener), None
    if tag is MatrixTag.SKEW_ADJACENCY:
        _needs_edges(kind, g)
        return 2.0 * g.m, None
    if tag in (MatrixTag.RANDIC_ADJACENCY, MatrixTag.SKEW_RANDIC):
        _needs_edges(kind, g)
        return 2.0 * general_randic_index(g, -1.0), None
    if tag is MatrixTag.RANDIC_INCIDENCE:
        _needs_edges(kind, g)
        return float(g.non_isolated), None
    if tag is MatrixTag.GENERAL_RANDIC:
        _needs_edges(kind, g)
        return 2.0 * general_randic_index(g, 2.0 * kind.beta), None
    raise ParameterError(f"No closed form for {kind}.")


def _moment_magnitudes(kind: MatrixKind, g: AnyGraph,
                       spectrum: Optional[Spectrum]) -> np.ndarray:
    if kind == INCIDENCE:
        q = spectrum if spectrum is not None else graph_spectrum(
            SIGNLESS_LAPLACIAN, _resolve(kind, g)[0])
        return np.sqrt(_clamp(q.values))
    s = spectrum if spectrum is not None else graph_spectrum(kind, g)
    return s.absolute


def _trace_sum(kind: MatrixKind, g: AnyGraph, fixed: Optional[float],
               spectrum: Optional[Spectrum]) -> float:
    total = fixed if fixed is not None else energy(kind, g, spectrum)
    if total <= 0:
        raise ZeroSpectrumError(f"{kind} has an all-zero spectrum.")
    return total


def closed_form_i1(kind: MatrixKind, g: AnyGraph,
                   spectrum: Optional[Spectrum] = None) -> float:
    squares, fixed = _index_terms(kind, _resolve(kind, g)[0])
    return 1.0 - squares / _trace_sum(kind, g, fixed, spectrum) ** 2


def closed_form(kind: MatrixKind, g: AnyGraph, alpha: float,
                log_base: LogBase = 2.0,
                spectrum: Optional[Spectrum] = None) -> Entropies:
    """I1 from the kind's index formula, I2 and I3 from the spectral moment
    over the trace sum.

    For the incidence kind a supplied ``spectrum`` is the signless Laplacian
    spectrum; for every other kind it is the kind's own spectrum.
    """
    alpha = check_alpha(alpha)
    base = resolve_log_base(log_base)
    squares, fixed = _index_terms(kind, _resolve(kind, g)[0])
    trace_sum = _trace_sum(kind, g, fixed, spectrum)
    moment = _power_sum(_moment_magnitudes(kind, g, spectrum), alpha)
    if moment <= 0:
        raise NumericalError(f"Spectral moment of {kind} vanished.")
    ratio = moment / trace_sum ** alpha
    return Entropies(
        1.0 - squares / trace_sum ** 2,
        math.log(ratio, base) / (1.0 - alpha),
        (ratio - 1.0) / (2.0 ** (1.0 - alpha) - 1.0))


def spectral_entropies(s: Spectrum, alpha: float,
                       log_base: LogBase = 2.0) -> Entropies:
    """The three entropies along the probability-vector route."""
    p = probabilities_from_spectrum(s, log_base)
    return Entropies(entropy_i1(p), entropy_i2(p, alpha),
                     entropy_i3(p, alpha))
