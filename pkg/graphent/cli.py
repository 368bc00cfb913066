# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

"""Command-line surface: ``graphent compute|verify|audit|scan``.

Exit codes: 0 on success, 1 when ``verify`` finds failing claims, 2 on usage
or input errors.
"""

import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO, Tuple

import click

from ._catalog import parse_measure
from ._compute import compute_report
from ._corpus import parse_corpus
from ._entropy import LogBase, ProbabilityVector, check_alpha, resolve_log_base
from ._errors import GraphentError, ParameterError
from ._io import parse_arc_list, parse_edge_list, parse_graph6_lines
from ._matrices import MatrixKind, all_kinds
from ._report import (measure_frame, measure_payload, scan_frame,
                      scan_payload, to_csv, to_json, verification_frame,
                      verification_payload)
from ._scan import FAMILIES, scan_extremal
from ._verify import (DEFAULT_ALPHAS, DEFAULT_BETAS, Tolerance,
                      VerifySettings, audit_corpus, audit_vectors,
                      verify_corpus, verify_graph)
from . import __version__

logger = logging.getLogger(__name__)

COMMANDS = ('compute', 'verify', 'audit', 'scan')
EXIT_OK, EXIT_FAILURES, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    corpus: Optional[str] = None
    matrices: Tuple[str, ...] = ()
    alphas: Tuple[float, ...] = DEFAULT_ALPHAS
    log_base: LogBase = 2.0
    seed: int = 0
    betas: Tuple[float, ...] = DEFAULT_BETAS
    tolerance: Tolerance = Tolerance()
    format: str = 'json'
    out: Optional[str] = None
    workers: int = 1
    chunk_size: int = 2048
    all_orientations: bool = False
    all_claims: bool = False
    measures: Tuple[str, ...] = ()
    family: str = 'trees'
    order: Optional[int] = None
    samples: int = 20
    ranking: bool = False
    probabilities: Tuple[str, ...] = ()
    timing: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ParameterError(f"Unknown command {self.command!r}.")
        if self.format not in ('json', 'csv'):
            raise ParameterError(f"Unknown format {self.format!r}.")
        if self.workers < 1:
            raise ParameterError("Worker count must be at least 1.")
        for alpha in self.alphas:
            check_alpha(alpha)
        resolve_log_base(self.log_base)


# input -----------------------------------------------------------------------

def _read(path: str, stdin: Optional[TextIO]) -> str:
    if path == '-':
        return (stdin or click.get_text_stream('stdin')).read()
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise ParameterError(f"Cannot read {path}: {error.strerror}.") \
            from None
    except UnicodeDecodeError as error:
        raise ParameterError(
            f"Cannot read {path}: not UTF-8 text (byte {error.start}).") \
            from None


def _write(path: str, text: str):
    try:
        Path(path).write_text(text, encoding='utf-8')
    except OSError as error:
        raise ParameterError(f"Cannot write {path}: {error.strerror}.") \
            from None
    logger.info("wrote %s", path)


def read_graph(path: str, stdin: Optional[TextIO] = None):
    """One graph from ``path`` by suffix: .g6 graph6, .arcs arc list,
    anything else an edge list."""
    text = _read(path, stdin)
    suffix = Path(path).suffix
    if suffix == '.g6':
        graphs = parse_graph6_lines(text)
        if len(graphs) != 1:
            raise ParameterError(
                f"{path} holds {len(graphs)} graphs; expected one.")
        return graphs[0]
    if suffix == '.arcs':
        return parse_arc_list(text)
    return parse_edge_list(text)


def _kinds(config: RunConfig) -> Tuple[MatrixKind, ...]:
    if config.matrices:
        return tuple(MatrixKind.parse(m) for m in config.matrices)
    return tuple(all_kinds(config.betas))


def _probability_vector(text: str) -> ProbabilityVector:
    try:
        values = [float(x) for x in text.split(',')]
    except ValueError:
        raise ParameterError(f"Bad probability vector {text!r}.") from None
    return ProbabilityVector(values, 'p=(' + text + ')')


# commands --------------------------------------------------------------------

def _compute(config: RunConfig,
             stdin: Optional[TextIO]) -> Tuple[int, str]:
    if config.input is None:
        raise ParameterError("compute needs --input.")
    for measure in config.measures:
        parse_measure(measure)
    g = read_graph(config.input, stdin)
    report = compute_report(
        g, _kinds(config) if config.matrices else None, config.alphas,
        config.log_base, config.seed, config.measures, config.betas,
        strict=bool(config.matrices))
    if config.format == 'csv':
        return EXIT_OK, to_csv(measure_frame(report))
    return EXIT_OK, to_json(measure_payload(report))


def _settings(config: RunConfig) -> VerifySettings:
    return VerifySettings(tuple(config.alphas), config.log_base, config.seed,
                          tuple(config.betas), config.all_orientations,
                          config.tolerance, config.all_claims)


def _verify(config: RunConfig,
            stdin: Optional[TextIO]) -> Tuple[int, str]:
    settings = _settings(config)
    start = time.perf_counter()
    if config.corpus is not None:
        report = verify_corpus(parse_corpus(config.corpus, config.seed),
                               settings, config.chunk_size, config.workers)
    elif config.input is not None:
        report = verify_graph(read_graph(config.input, stdin), settings)
    else:
        raise ParameterError("verify needs --corpus or --input.")
    report.runtime = time.perf_counter() - start
    logger.info("%d graphs, %d claim evaluations, %d failures",
                report.graphs, report.evaluations, report.failure_count)
    code = EXIT_FAILURES if report.failure_count else EXIT_OK
    if config.format == 'csv':
        return code, to_csv(verification_frame(report))
    return code, to_json(verification_payload(report, config.timing))


def _audit(config: RunConfig,
           stdin: Optional[TextIO]) -> Tuple[int, str]:
    start = time.perf_counter()
    if config.probabilities:
        report = audit_vectors(
            [_probability_vector(p) for p in config.probabilities],
            config.alphas, config.log_base, config.tolerance)
    elif config.corpus is not None:
        corpus = parse_corpus(config.corpus, config.seed)
        report = audit_corpus(corpus.graphs(), _kinds(config), config.alphas,
                              config.log_base, config.seed, config.tolerance,
                              str(corpus))
    elif config.input is not None:
        g = read_graph(config.input, stdin)
        report = audit_corpus([g], _kinds(config), config.alphas,
                              config.log_base, config.seed, config.tolerance,
                              config.input)
    else:
        raise ParameterError(
            "audit needs --probabilities, --corpus or --input.")
    report.runtime = time.perf_counter() - start
    # audit violations leave the exit code at 0
    if config.format == 'csv':
        return EXIT_OK, to_csv(verification_frame(report))
    return EXIT_OK, to_json(verification_payload(report, config.timing))


def _scan(config: RunConfig,
          stdin: Optional[TextIO]) -> Tuple[int, str]:
    if config.order is None or not config.measures:
        raise ParameterError("scan needs --order and --measure.")
    if len(config.measures) != 1:
        raise ParameterError("scan takes exactly one --measure.")
    start = time.perf_counter()
    result = scan_extremal(config.family, config.order, config.measures[0],
                           config.log_base, config.chunk_size, config.workers,
                           config.samples, config.seed)
    if config.format == 'csv':
        return EXIT_OK, to_csv(scan_frame(result))
    payload = scan_payload(result, config.ranking)
    if config.timing:
        payload['runtime'] = time.perf_counter() - start
    return EXIT_OK, to_json(payload)


_DISPATCH = {'compute': _compute, 'verify': _verify, 'audit': _audit,
             'scan': _scan}


def run(config: RunConfig, stdin: Optional[TextIO] = None) -> int:
    """Runs one command and writes its report to ``config.out`` (or
    stdout). Errors go to stderr as a one-line diagnostic."""
    try:
        code, text = _DISPATCH[config.command](config, stdin)
        if config.out is None or config.out == '-':
            click.echo(text, nl=False)
        else:
            _write(config.out, text)
    except GraphentError as error:
        click.echo(f"error: {type(error).__name__}: {error}", err=True)
        return EXIT_USAGE
    return code


# click surface ---------------------------------------------------------------

class AlphaList(click.ParamType):
    name = 'alphas'

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(check_alpha(float(x)) for x in str(value).split(','))
        except ValueError as error:
            self.fail(str(error) or f"{value!r} is not a list of reals.",
                      param, ctx)


class LogBaseType(click.ParamType):
    name = 'base'

    def convert(self, value, param, ctx):
        if value == 'e' or isinstance(value, float):
            return value
        try:
            base = float(value)
            resolve_log_base(base)
        except ValueError as error:
            self.fail(str(error) or f"{value!r} is not a log base.",
                      param, ctx)
        return base


def _configure_logging(verbose: int):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format='%(levelname)s %(name)s: %(message)s')


def _common(function):
    options = [
        click.option('--alpha', 'alphas', type=AlphaList(),
                     default=','.join(format(a, 'g') for a in DEFAULT_ALPHAS),
                     show_default=True,
                     help='Comma-separated orders alpha (> 0, != 1).'),
        click.option('--log-base', type=LogBaseType(), default='2',
                     show_default=True, help='2, e, 10 or any real > 0, != 1.'),
        click.option('--seed', type=int, default=0, show_default=True),
        click.option('--format', 'fmt', type=click.Choice(['json', 'csv']),
                     default='json', show_default=True),
        click.option('--out', type=click.Path(dir_okay=False), default=None,
                     help='Report path; stdout when omitted.'),
        click.option('--timing', is_flag=True,
                     help='Add the runtime to JSON reports.'),
        click.option('-v', '--verbose', count=True),
    ]
    for option in reversed(options):
        function = option(function)
    return function


_input = click.option('--input', 'input_path', default=None,
                      help='Edge list, .arcs arc list or .g6 file; - reads '
                           'stdin.')
_corpus = click.option('--corpus', default=None,
                       help='all:<n>, trees:<n> or gnp:<n>,<p>,<count>.')
_matrix = click.option('--matrix', 'matrices', multiple=True,
                       help='Matrix kind, e.g. q, norm-l, general-randic:-1.')
_workers = click.option('--workers', type=click.IntRange(min=1), default=1,
                        envvar='GRAPHENT_WORKERS', show_default=True)
_chunk_size = click.option('--chunk-size', type=click.IntRange(min=1),
                           default=2048, show_default=True)


def _finish(ctx: click.Context, verbose: int, **fields):
    _configure_logging(verbose)
    try:
        config = RunConfig(**fields)
    except GraphentError as error:
        raise click.UsageError(str(error), ctx) from None
    ctx.exit(run(config))


@click.group()
@click.version_option(__version__)
def cli():
    """Generalized graph entropies: compute, verify, audit, scan."""


@cli.command()
@_input
@_matrix
@click.option('--measure', 'measures', multiple=True,
              help='Extra measure id, e.g. wk:3 or energy:skew.')
@_common
@click.pass_context
def compute(ctx, input_path, matrices, measures, alphas, log_base,
            seed, fmt, out, timing, verbose):
    """Indices, spectra, energies and entropies of one graph."""
    _finish(ctx, verbose, command='compute', input=input_path,
            matrices=matrices, measures=measures, alphas=alphas,
            log_base=log_base, seed=seed, format=fmt, out=out,
            timing=timing)


@cli.command()
@_input
@_corpus
@click.option('--beta', 'betas', default='-1,-0.5,1', show_default=True,
              help='General Randic exponents to check.')
@click.option('--all-orientations', is_flag=True,
              help='Every orientation of graphs with at most 10 edges.')
@click.option('--all-claims', is_flag=True,
              help='Report passing claims too, not only failures.')
@_workers
@_chunk_size
@_common
@click.pass_context
def verify(ctx, input_path, corpus, betas, all_orientations, all_claims,
           workers, chunk_size, alphas, log_base, seed, fmt, out, timing,
           verbose):
    """Checks the entropy equalities, trace identities and bounds."""
    try:
        betas = tuple(float(b) for b in betas.split(','))
    except ValueError:
        raise click.BadParameter(f"{betas!r} is not a list of reals.",
                                 ctx, param_hint='--beta') from None
    _finish(ctx, verbose, command='verify', input=input_path, corpus=corpus,
            betas=betas, all_orientations=all_orientations,
            all_claims=all_claims, workers=workers, chunk_size=chunk_size,
            alphas=alphas, log_base=log_base, seed=seed, format=fmt, out=out,
            timing=timing)


@cli.command()
@click.option('--probabilities', multiple=True,
              help='Comma-separated probability vector; repeatable.')
@_input
@_corpus
@_matrix
@_common
@click.pass_context
def audit(ctx, probabilities, input_path, corpus, matrices, alphas, log_base,
          seed, fmt, out, timing, verbose):
    """Audits the inequalities between I1, I2 and I3."""
    _finish(ctx, verbose, command='audit', probabilities=probabilities,
            input=input_path, corpus=corpus, matrices=matrices,
            alphas=alphas, log_base=log_base, seed=seed, format=fmt, out=out,
            timing=timing)


@cli.command()
@click.option('--family', type=click.Choice(FAMILIES), default='trees',
              show_default=True)
@click.option('--order', type=int, required=True)
@click.option('--measure', required=True,
              help='Measure id, e.g. i1:incidence.')
@click.option('--samples', type=click.IntRange(min=1), default=20,
              show_default=True, help='Random orientations per extremal '
                                      'tree.')
@click.option('--ranking', is_flag=True,
              help='Include the full ranking in JSON output.')
@_workers
@_chunk_size
@_common
@click.pass_context
def scan(ctx, family, order, measure, samples, ranking, workers, chunk_size,
         alphas, log_base, seed, fmt, out, timing, verbose):
    """Extremal graphs of a measure over a whole family."""
    _finish(ctx, verbose, command='scan', family=family, order=order,
            measures=(measure,), samples=samples, ranking=ranking,
            workers=workers, chunk_size=chunk_size, alphas=alphas,
            log_base=log_base, seed=seed, format=fmt, out=out, timing=timing)
