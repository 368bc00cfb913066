# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import (Any, Callable, Dict, Iterable, List, Optional, Sequence,
                    Tuple, Union)

from ._corpus import Chunk, CorpusSpec, chunk_graphs, map_chunks
from ._entropy import (LogBase, ProbabilityVector, closed_form,
                       closed_form_i1, entropy_i1, entropy_i2, entropy_i3,
                       probabilities_from_spectrum)
from ._errors import (GraphentError, HypothesisError, IsolatedVertexError,
                      ParameterError)
from ._graph import (Graph, OrientedGraph, canonical_orientation,
                     enumerate_orientations, has_two_degree_split,
                     is_complete, is_near_matching, is_perfect_matching,
                     is_regular, random_orientation)
from ._io import describe
from ._matrices import (INCIDENCE, SIGNLESS_LAPLACIAN, AnyGraph, MatrixKind,
                        MatrixTag, all_kinds, build, graph_spectra)
from ._measures import distance_moments, first_zagreb, general_randic_index
from ._spectra import Spectrum, SpectrumKind, determinant

logger = logging.getLogger(__name__)

DEFAULT_ALPHAS = (0.5, 2.0, 3.0)
DEFAULT_BETAS = (-1.0, -0.5, 1.0)
MAX_EXHAUSTIVE_ARCS = 10


class Status(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    NOT_APPLICABLE = 'not-applicable'
    EQUALITY_ATTAINED = 'equality-attained'
    HOLDS = 'holds'
    HOLDS_WITH_EQUALITY = 'holds-with-equality'
    VIOLATED = 'violated'


FAILING = frozenset({Status.FAIL, Status.VIOLATED})


@dataclass(frozen=True)
class Tolerance:
    """|a - b| <= absolute + relative * max(|a|, |b|) counts as equal.

    ``band`` decides whether a bound is attained.
    """
    absolute: float = 1e-9
    relative: float = 1e-8
    band: float = 1e-8

    def bound(self, a: float, b: float) -> float:
        return self.absolute + self.relative * max(abs(a), abs(b))

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.bound(a, b)

    def attains(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.band * max(1.0, abs(a), abs(b))


@dataclass(frozen=True, eq=False)
class ClaimResult:
    claim: str
    graph: str
    status: Status
    residual: float = 0.0
    witness: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status in FAILING


Tally = Dict[str, Counter]


def tally(results: Iterable[ClaimResult]) -> Tally:
    out: Tally = {}
    for result in results:
        out.setdefault(result.claim, Counter())[result.status.value] += 1
    return out


def _merge(into: Tally, other: Tally):
    for claim, counts in other.items():
        into.setdefault(claim, Counter()).update(counts)


def _summary(counts: Tally) -> Dict[str, Dict[str, int]]:
    order = [s.value for s in Status]
    return {claim: {s: counts[claim][s] for s in order if counts[claim][s]}
            for claim in sorted(counts)}


@dataclass
class VerificationReport:
    corpus: str
    tolerance: Tolerance
    claims: List[ClaimResult]
    summary: Dict[str, Dict[str, int]]
    graphs: int = 0
    runtime: Optional[float] = None

    @classmethod
    def from_results(cls, corpus: str, tolerance: Tolerance,
                     results: Sequence[ClaimResult],
                     graphs: int = 1) -> 'VerificationReport':
        return cls(corpus, tolerance, list(results),
                   _summary(tally(results)), graphs)

    @property
    def evaluations(self) -> int:
        return sum(sum(c.values()) for c in self.summary.values())

    @property
    def failures(self) -> List[ClaimResult]:
        return [c for c in self.claims if c.failed]

    @property
    def failure_count(self) -> int:
        return sum(counts.get(s.value, 0) for counts in self.summary.values()
                   for s in FAILING)

    def count(self, status: Status, prefix: str = '') -> int:
        return sum(counts.get(status.value, 0)
                   for claim, counts in self.summary.items()
                   if claim.startswith(prefix))


# samples ----------------------------------------------------------------------

@dataclass(frozen=True)
class _Sample:
    kind: MatrixKind
    target: AnyGraph
    spectrum: Union[Spectrum, GraphentError]
    # signless Laplacian spectrum of the underlying graph, incidence only
    q_spectrum: Union[Spectrum, GraphentError, None] = None

    @property
    def graph(self) -> Graph:
        return _underlying(self.target)


def _underlying(g: AnyGraph) -> Graph:
    return g.underlying if isinstance(g, OrientedGraph) else g


def _unwrap(value):
    if isinstance(value, BaseException):
        raise value
    return value


def _targets(kind: MatrixKind, g: AnyGraph, seed: int,
             all_orientations: bool) -> List[AnyGraph]:
    graph = _underlying(g)
    if not kind.oriented:
        return [graph]
    if isinstance(g, OrientedGraph):
        return [g]
    if all_orientations and graph.m <= MAX_EXHAUSTIVE_ARCS:
        return list(enumerate_orientations(graph))
    canonical = canonical_orientation(graph)
    sampled = random_orientation(graph, seed)
    if sampled.arcs == canonical.arcs:
        return [canonical]
    return [canonical, sampled]


def _collect_samples(graphs: Sequence[AnyGraph], kinds: Sequence[MatrixKind],
                     seed: int, all_orientations: bool
                     ) -> List[List[_Sample]]:
    per_graph: List[List[_Sample]] = [[] for _ in graphs]
    q_spectra = None
    if INCIDENCE in kinds:
        q_spectra = graph_spectra(
            SIGNLESS_LAPLACIAN, [_underlying(g) for g in graphs],
            collect_errors=True)
    for kind in kinds:
        owners, targets = [], []
        for index, g in enumerate(graphs):
            for target in _targets(kind, g, seed, all_orientations):
                owners.append(index)
                targets.append(target)
        spectra = graph_spectra(kind, targets, collect_errors=True)
        for owner, target, spectrum in zip(owners, targets, spectra):
            q = q_spectra[owner] if kind == INCIDENCE else None
            per_graph[owner].append(_Sample(kind, target, spectrum, q))
    return per_graph


def _unevaluated(claims: Sequence[str], graph: str,
                 error: GraphentError) -> List[ClaimResult]:
    if isinstance(error, HypothesisError):
        return [ClaimResult(c, graph, Status.NOT_APPLICABLE, 0.0,
                            {'reason': str(error)}) for c in claims]
    witness = {'error': type(error).__name__, 'message': str(error)}
    return [ClaimResult(c, graph, Status.FAIL, math.nan, witness)
            for c in claims]


def _compare(claim: str, graph: str, measured: float, expected: float,
             tolerance: Tolerance) -> ClaimResult:
    residual = abs(measured - expected)
    status = (Status.PASS if tolerance.close(measured, expected)
              else Status.FAIL)
    return ClaimResult(claim, graph, status, residual,
                       {'measured': measured, 'expected': expected})


# equalities -------------------------------------------------------------------

def _equality_claims(sample: _Sample, alphas: Sequence[float],
                     log_base: LogBase,
                     tolerance: Tolerance) -> List[ClaimResult]:
    kind = sample.kind
    claims = [f"equality:{kind}:i1"]
    for alpha in alphas:
        claims.append(f"equality:{kind}:i2@{alpha:g}")
        claims.append(f"equality:{kind}:i3@{alpha:g}")
    graph = describe(sample.target)
    try:
        spectrum = _unwrap(sample.spectrum)
        closed_spectrum = (_unwrap(sample.q_spectrum) if kind == INCIDENCE
                           else spectrum)
        p = probabilities_from_spectrum(spectrum, log_base)
        pairs = [(entropy_i1(p),
                  closed_form_i1(kind, sample.target, closed_spectrum))]
        for alpha in alphas:
            closed = closed_form(kind, sample.target, alpha, log_base,
                                 closed_spectrum)
            pairs.append((entropy_i2(p, alpha), closed.i2))
            pairs.append((entropy_i3(p, alpha), closed.i3))
    except GraphentError as error:
        return _unevaluated(claims, graph, error)
    return [_compare(claim, graph, measured, expected, tolerance)
            for claim, (measured, expected) in zip(claims, pairs)]


# trace identities -------------------------------------------------------------

def _square_sum(kind: MatrixKind, g: Graph) -> float:
    tag = kind.tag
    if tag is MatrixTag.SIGNLESS_LAPLACIAN:
        return first_zagreb(g) + 2.0 * g.m
    if tag in (MatrixTag.NORMALIZED_LAPLACIAN,
               MatrixTag.NORMALIZED_SIGNLESS_LAPLACIAN):
        return g.non_isolated + 2.0 * general_randic_index(g, -1.0)
    if tag in (MatrixTag.INCIDENCE, MatrixTag.SKEW_ADJACENCY):
        return 2.0 * g.m
    if tag is MatrixTag.DISTANCE:
        return 4.0 * distance_moments(g)[2]
    if tag in (MatrixTag.RANDIC_ADJACENCY, MatrixTag.SKEW_RANDIC):
        return 2.0 * general_randic_index(g, -1.0)
    if tag is MatrixTag.RANDIC_INCIDENCE:
        return float(g.non_isolated)
    return 2.0 * general_randic_index(g, 2.0 * kind.beta)


def _trace(kind: MatrixKind, g: Graph) -> float:
    if kind.tag is MatrixTag.SIGNLESS_LAPLACIAN:
        return 2.0 * g.m
    if kind.tag in (MatrixTag.NORMALIZED_LAPLACIAN,
                    MatrixTag.NORMALIZED_SIGNLESS_LAPLACIAN):
        return float(g.non_isolated)
    return 0.0


def _trace_claims(sample: _Sample,
                  tolerance: Tolerance) -> List[ClaimResult]:
    kind = sample.kind
    with_sum = kind.spectrum_kind is SpectrumKind.EIGENVALUES
    claims = [f"trace:{kind}:squares"]
    if with_sum:
        claims.insert(0, f"trace:{kind}:sum")
    graph = describe(sample.target)
    try:
        spectrum = _unwrap(sample.spectrum)
        pairs = [(math.fsum(spectrum.absolute ** 2),
                  _square_sum(kind, sample.graph))]
        if with_sum:
            pairs.insert(0, (math.fsum(spectrum.values),
                             _trace(kind, sample.graph)))
    except GraphentError as error:
        return _unevaluated(claims, graph, error)
    return [_compare(claim, graph, measured, expected, tolerance)
            for claim, (measured, expected) in zip(claims, pairs)]


# bounds -----------------------------------------------------------------------

@dataclass(frozen=True)
class _Bound:
    name: str
    side: str
    value: Callable[[_Sample], float]
    condition: Optional[Callable[[Graph], bool]] = None
    # replaces the measured I1 for bounds between two constants
    measured: Optional[Callable[[_Sample], float]] = None


def _full_support(g: Graph):
    if g.non_isolated != g.n:
        raise IsolatedVertexError(
            f"{g.n - g.non_isolated} isolated vertices; the bound needs "
            f"none.")


def _q_lower(s: _Sample) -> float:
    g = s.graph
    _full_support(g)
    low, high = g.min_degree, g.max_degree
    return (1 - 1 / (2 * g.m) - 1 / (2 * g.n)
            - (high ** 2 + low ** 2) / (4 * g.n * high * low))


def _normalized_lower(s: _Sample) -> float:
    g = s.graph
    _full_support(g)
    n = g.n
    return 1 - 2 / n + (1 / n ** 2 if n % 2 else 0.0)


def _normalized_upper(s: _Sample) -> float:
    _full_support(s.graph)
    return 1 - 1 / (s.graph.n - 1)


def _normalized_regular(s: _Sample, degree: int) -> float:
    _full_support(s.graph)
    n = s.graph.n
    return 1 - 1 / n - 1 / (n * degree)


def _extremal_matching(g: Graph) -> bool:
    return is_near_matching(g) if g.n % 2 else is_perfect_matching(g)


def _randic_incidence_upper(s: _Sample) -> float:
    g = s.graph
    n = g.n
    return 1 - g.non_isolated / (
        n * n - 3 * n + 4 + 2 * math.sqrt(2 * (n - 1) * (n - 2)))


def _randic_incidence_lower(s: _Sample) -> float:
    _full_support(s.graph)
    return 1 - s.graph.non_isolated / s.graph.n


def _skew_det_lower(s: _Sample) -> float:
    g = s.graph
    det = abs(determinant(build(MatrixKind(MatrixTag.SKEW_ADJACENCY),
                                s.target)))
    return 1 - 2 * g.m / (2 * g.m + g.n * (g.n - 1) * det ** (2 / g.n))


def _uniform(s: _Sample) -> float:
    return 1 - 1 / s.graph.n


_NORMALIZED_BOUNDS = (
    _Bound('lower', 'lower', _normalized_lower, _extremal_matching),
    _Bound('upper', 'upper', _normalized_upper, is_complete),
    _Bound('regular-lower', 'lower',
           lambda s: _normalized_regular(s, s.graph.min_degree), is_regular),
    _Bound('regular-upper', 'upper',
           lambda s: _normalized_regular(s, s.graph.max_degree), is_regular),
)

_BOUNDS: Dict[MatrixTag, Tuple[_Bound, ...]] = {
    MatrixTag.SIGNLESS_LAPLACIAN: (
        _Bound('upper', 'upper', lambda s: 1 - 1 / (2 * s.graph.m)
               - 1 / s.graph.n),
        _Bound('lower', 'lower', _q_lower,
               lambda g: is_regular(g) or has_two_degree_split(g)),
    ),
    MatrixTag.NORMALIZED_LAPLACIAN: _NORMALIZED_BOUNDS,
    MatrixTag.NORMALIZED_SIGNLESS_LAPLACIAN: _NORMALIZED_BOUNDS,
    MatrixTag.INCIDENCE: (
        _Bound('lower', 'lower', lambda s: 0.0, lambda g: g.m == 1),
        _Bound('upper', 'upper', _uniform, lambda g: False),
    ),
    MatrixTag.DISTANCE: (
        _Bound('lower', 'lower', lambda s: 0.0),
        _Bound('upper', 'upper', _uniform),
    ),
    MatrixTag.SKEW_ADJACENCY: (
        _Bound('det-lower', 'lower', _skew_det_lower),
        _Bound('upper', 'upper', _uniform),
        _Bound('upper-chain', 'upper',
               lambda s: 1 - 2 * s.graph.m / (s.graph.n ** 2
                                              * s.graph.max_degree),
               measured=_uniform),
    ),
    MatrixTag.RANDIC_ADJACENCY: (
        _Bound('upper', 'upper', _uniform, is_perfect_matching),
    ),
    MatrixTag.RANDIC_INCIDENCE: (
        _Bound('lower', 'lower', _randic_incidence_lower,
               lambda g: g.n == 2 and g.m == 1),
        _Bound('upper', 'upper', _randic_incidence_upper, is_complete),
    ),
    MatrixTag.SKEW_RANDIC: (
        _Bound('upper', 'upper', _uniform),
    ),
}


def _judge(claim: str, graph: str, measured: float, bound: float, side: str,
           condition: Optional[bool], tolerance: Tolerance) -> ClaimResult:
    violation = measured - bound if side == 'upper' else bound - measured
    attained = tolerance.attains(measured, bound)
    witness = {'measured': measured, 'bound': bound, 'side': side}
    if violation > tolerance.bound(measured, bound):
        return ClaimResult(claim, graph, Status.FAIL, violation, witness)
    if condition is not None:
        witness['condition'] = condition
        if condition != attained:
            witness['attained'] = attained
            return ClaimResult(claim, graph, Status.FAIL, violation, witness)
    status = Status.EQUALITY_ATTAINED if attained else Status.PASS
    return ClaimResult(claim, graph, status, violation, witness)


def _bound_claims(sample: _Sample,
                  tolerance: Tolerance) -> List[ClaimResult]:
    bounds = _BOUNDS.get(sample.kind.tag, ())
    if not bounds:
        return []
    claims = [f"bound:{sample.kind}:{b.name}" for b in bounds]
    graph = describe(sample.target)
    try:
        i1 = entropy_i1(probabilities_from_spectrum(_unwrap(sample.spectrum)))
    except GraphentError as error:
        return _unevaluated(claims, graph, error)
    out = []
    for claim, b in zip(claims, bounds):
        try:
            value = b.value(sample)
            measured = b.measured(sample) if b.measured else i1
        except GraphentError as error:
            out.extend(_unevaluated([claim], graph, error))
            continue
        condition = b.condition(sample.graph) if b.condition else None
        out.append(_judge(claim, graph, measured, value, b.side, condition,
                          tolerance))
    return out


# public checks ---------------------------------------------------------------

def check_equalities(g: AnyGraph, alphas: Sequence[float] = DEFAULT_ALPHAS,
                     seed: int = 0, log_base: LogBase = 2.0,
                     betas: Sequence[float] = DEFAULT_BETAS,
                     all_orientations: bool = False,
                     tolerance: Tolerance = Tolerance()
                     ) -> List[ClaimResult]:
    """Spectral-route entropies against the closed forms, for every kind."""
    samples = _collect_samples([g], all_kinds(betas), seed,
                               all_orientations)[0]
    return [r for s in samples
            for r in _equality_claims(s, alphas, log_base, tolerance)]


def check_trace_identities(g: AnyGraph,
                           betas: Sequence[float] = DEFAULT_BETAS,
                           seed: int = 0,
                           tolerance: Tolerance = Tolerance()
                           ) -> List[ClaimResult]:
    samples = _collect_samples([g], all_kinds(betas), seed, False)[0]
    return [r for s in samples for r in _trace_claims(s, tolerance)]


def check_bounds(g: AnyGraph, seed: int = 0,
                 all_orientations: bool = False,
                 tolerance: Tolerance = Tolerance()) -> List[ClaimResult]:
    kinds = [k for k in all_kinds(()) if k.tag in _BOUNDS]
    samples = _collect_samples([g], kinds, seed, all_orientations)[0]
    return [r for s in samples for r in _bound_claims(s, tolerance)]


@dataclass(frozen=True)
class VerifySettings:
    alphas: Tuple[float, ...] = DEFAULT_ALPHAS
    log_base: LogBase = 2.0
    seed: int = 0
    betas: Tuple[float, ...] = DEFAULT_BETAS
    all_orientations: bool = False
    tolerance: Tolerance = Tolerance()
    keep_all: bool = False


def _verify_graphs(graphs: Sequence[AnyGraph],
                   settings: VerifySettings) -> List[List[ClaimResult]]:
    kinds = all_kinds(settings.betas)
    samples = _collect_samples(graphs, kinds, settings.seed,
                               settings.all_orientations)
    out = []
    for per_graph in samples:
        results = []
        for s in per_graph:
            results.extend(_equality_claims(
                s, settings.alphas, settings.log_base, settings.tolerance))
        for s in per_graph:
            results.extend(_trace_claims(s, settings.tolerance))
        for s in per_graph:
            results.extend(_bound_claims(s, settings.tolerance))
        out.append(results)
    return out


def verify_graph(g: AnyGraph,
                 settings: VerifySettings = VerifySettings()
                 ) -> VerificationReport:
    results = _verify_graphs([g], settings)[0]
    return VerificationReport.from_results(
        describe(g), settings.tolerance, results)


def _verify_chunk(task: Tuple[Chunk, VerifySettings]
                  ) -> Tuple[int, Tally, List[ClaimResult]]:
    chunk, settings = task
    graphs = list(chunk_graphs(chunk))
    counts: Tally = {}
    kept = []
    for results in _verify_graphs(graphs, settings):
        _merge(counts, tally(results))
        kept.extend(r for r in results if settings.keep_all or r.failed)
    return len(graphs), counts, kept


def verify_corpus(corpus: CorpusSpec,
                  settings: VerifySettings = VerifySettings(),
                  chunk_size: int = 2048,
                  workers: int = 1) -> VerificationReport:
    chunks = corpus.chunks(chunk_size)
    tasks = [(chunk, settings) for chunk in chunks]
    counts: Tally = {}
    claims: List[ClaimResult] = []
    graphs = 0
    for index, (size, chunk_counts, kept) in enumerate(
            map_chunks(_verify_chunk, tasks, workers), start=1):
        graphs += size
        _merge(counts, chunk_counts)
        claims.extend(kept)
        logger.info("chunk %d/%d: %d graphs, %d claims, %d failures",
                    index, len(tasks), size,
                    sum(sum(c.values()) for c in chunk_counts.values()),
                    sum(1 for r in kept if r.failed))
    return VerificationReport(str(corpus), settings.tolerance, claims,
                              _summary(counts), graphs)


# information inequalities ----------------------------------------------------

def _inequalities(i1: float, i2: float, i3: float, alpha: float):
    """(name, applies, lhs, relation, rhs) for each inequality form."""
    ln2 = math.log(2.0)
    c = 1.0 - 2.0 ** (1.0 - alpha)
    k = ln2 / (alpha - 1.0)
    return [
        ('i2-below-scaled-i3', 0 < alpha < 1, i2, '<', i3 * ln2),
        ('i2-above-scaled-i3', alpha > 1, i2, '>', c * k * i3),
        ('i3-above-i1', alpha >= 2 or alpha < 1, i3, '>', i1),
        ('i1-above-scaled-i3', 1 < alpha < 2, i1, '>', c * i3),
        ('i2-above-scaled-i1', alpha >= 2, i2, '>', c * k * i1),
        ('i2-above-squared-scaled-i1', 1 < alpha < 2, i2, '>',
         c * c * k * i1),
        ('i2-above-i1', alpha < 1, i2, '>', i1),
    ]


def _label(p: ProbabilityVector) -> str:
    if p.origin:
        return p.origin
    return 'p=(' + ','.join(format(x, '.6g') for x in p.p) + ')'


def audit_inequalities(p: ProbabilityVector,
                       alphas: Sequence[float] = DEFAULT_ALPHAS,
                       log_base: Optional[LogBase] = None,
                       tolerance: Tolerance = Tolerance(),
                       prefix: str = 'inequality',
                       graph: Optional[str] = None) -> List[ClaimResult]:
    """Classifies each inequality form at each alpha as holds,
    holds-with-equality or violated; forms outside their alpha range are
    not-applicable. The residual is the margin in the violating direction.
    """
    if log_base is not None:
        p = ProbabilityVector(p.p, p.origin, log_base)
    graph = graph if graph is not None else _label(p)
    i1 = entropy_i1(p)
    out = []
    for alpha in alphas:
        i2, i3 = entropy_i2(p, alpha), entropy_i3(p, alpha)
        for name, applies, lhs, relation, rhs in _inequalities(
                i1, i2, i3, alpha):
            claim = f"{prefix}:{name}@{alpha:g}"
            if not applies:
                out.append(ClaimResult(claim, graph, Status.NOT_APPLICABLE,
                                       0.0, {'alpha': alpha}))
                continue
            margin = lhs - rhs if relation == '<' else rhs - lhs
            if tolerance.close(lhs, rhs):
                status = Status.HOLDS_WITH_EQUALITY
            elif margin > 0:
                status = Status.VIOLATED
            else:
                status = Status.HOLDS
            out.append(ClaimResult(claim, graph, status, margin, {
                'lhs': lhs, 'relation': relation, 'rhs': rhs,
                'alpha': alpha, 'margin': margin}))
    return out


def audit_corpus(graphs: Iterable[AnyGraph], kinds: Sequence[MatrixKind],
                 alphas: Sequence[float] = DEFAULT_ALPHAS,
                 log_base: LogBase = 2.0, seed: int = 0,
                 tolerance: Tolerance = Tolerance(),
                 corpus: str = '') -> VerificationReport:
    """Inequality audit over the spectrum-derived probability vectors of
    every graph and kind."""
    graphs = list(graphs)
    results = []
    for samples in _collect_samples(graphs, kinds, seed, False):
        for s in samples:
            prefix = f"inequality:{s.kind}"
            graph = describe(s.target)
            try:
                p = probabilities_from_spectrum(_unwrap(s.spectrum), log_base)
            except GraphentError as error:
                claims = [f"{prefix}:{name}@{alpha:g}" for alpha in alphas
                          for name, *_ in _inequalities(0, 0, 0, alpha)]
                results.extend(_unevaluated(claims, graph, error))
                continue
            results.extend(audit_inequalities(p, alphas, None, tolerance,
                                              prefix, graph))
    return VerificationReport.from_results(corpus, tolerance, results,
                                           len(graphs))


def audit_vectors(vectors: Sequence[ProbabilityVector],
                  alphas: Sequence[float] = DEFAULT_ALPHAS,
                  log_base: Optional[LogBase] = None,
                  tolerance: Tolerance = Tolerance()) -> VerificationReport:
    if not vectors:
        raise ParameterError("No probability vectors to audit.")
    results = [r for p in vectors
               for r in audit_inequalities(p, alphas, log_base, tolerance)]
    return VerificationReport.from_results(
        'probabilities', tolerance, results, len(vectors))
