# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np
import pandas as pd

from ._catalog import evaluate_many, parse_measure
from ._corpus import Chunk, CorpusSpec, chunk_graphs, map_chunks
from ._entropy import LogBase
from ._errors import GraphentError, RangeError
from ._graph import (MAX_ENUMERATION_ORDER, MAX_TREE_ORDER, Graph,
                     canonical_orientation, is_path, is_star,
                     random_orientation)
from ._io import describe, parse_description

logger = logging.getLogger(__name__)

FAMILIES = ('trees', 'oriented-trees', 'all-graphs')
TIE_TOLERANCE = 1e-9
# extremal graphs per side that get the orientation sweep
SPREAD_REPRESENTATIVES = 8


@dataclass(frozen=True)
class Extremum:
    value: float
    graphs: Tuple[str, ...]
    shapes: Tuple[str, ...] = ()


@dataclass
class ScanResult:
    family: str
    order: int
    measure: str
    count: int
    minimum: Extremum
    maximum: Extremum
    ranking: pd.DataFrame
    orientation_spread: Dict[str, Dict[str, float]] = field(
        default_factory=dict)
    # sampled orientations per representative, 0 when no spread was taken
    orientation_samples: int = 0
    spread_representatives: int = 0


def _source(family: str, order: int) -> Tuple:
    if family in ('trees', 'oriented-trees'):
        if not 2 <= order <= MAX_TREE_ORDER:
            raise RangeError(
                f"Tree scans support 2 <= n <= {MAX_TREE_ORDER}, got {order}.")
        return ('trees', order)
    if family == 'all-graphs':
        if not 1 <= order <= MAX_ENUMERATION_ORDER:
            raise RangeError(
                f"Graph scans support 1 <= n <= {MAX_ENUMERATION_ORDER}, "
                f"got {order}.")
        return ('all', order)
    raise RangeError(f"Unknown scan family {family!r}; expected one of "
                     f"{', '.join(FAMILIES)}.")


def _shape(g: Graph) -> str:
    if is_star(g):
        return 'star'
    if is_path(g):
        return 'path'
    return 'other'


def _targets(graphs, oriented: bool):
    if oriented:
        return [canonical_orientation(g) for g in graphs]
    return list(graphs)


def _evaluate(measure_id: str, targets, log_base: LogBase) -> List[float]:
    measure = parse_measure(measure_id)
    try:
        return evaluate_many(measure, targets, log_base)
    except GraphentError:
        pass
    out = []
    for target in targets:
        try:
            out.append(evaluate_many(measure, [target], log_base)[0])
        except GraphentError as error:
            logger.debug("%s undefined on %s: %s", measure_id,
                         describe(target), error)
            out.append(math.nan)
    return out


def _scan_chunk(task: Tuple[Chunk, str, LogBase]
                ) -> Tuple[List[str], List[float], List[str]]:
    chunk, measure_id, log_base = task
    graphs = list(chunk_graphs(chunk))
    targets = _targets(graphs, parse_measure(measure_id).oriented)
    return ([describe(t) for t in targets],
            _evaluate(measure_id, targets, log_base),
            [_shape(g) for g in graphs])


def _extremum(ranking: pd.DataFrame, value: float) -> Extremum:
    ties = ranking[np.abs(ranking['value'] - value) <= TIE_TOLERANCE]
    return Extremum(value, tuple(ties['graph']),
                    tuple(sorted(set(ties['shape']))))


def _spread(graphs: Sequence[str], measure_id: str, samples: int, seed: int,
            log_base: LogBase) -> Dict[str, Dict[str, float]]:
    out = {}
    for text in graphs[:SPREAD_REPRESENTATIVES]:
        g = parse_description(text).underlying
        targets = [random_orientation(g, seed + j) for j in range(samples)]
        values = _evaluate(measure_id, targets, log_base)
        out[describe(g)] = {'min': float(np.nanmin(values)),
                            'max': float(np.nanmax(values))}
    return out


def scan_extremal(family: str, order: int, measure: str,
                  log_base: LogBase = 2.0, chunk_size: int = 2048,
                  workers: int = 1, orientation_samples: int = 20,
                  seed: int = 0) -> ScanResult:
    """Evaluates ``measure`` on every member of ``family`` at ``order`` and
    reports the minimizing and maximizing tie sets."""
    source = _source(family, order)
    parsed = parse_measure(measure)
    corpus = CorpusSpec(f"{family}:{order}", (source,))
    tasks = [(chunk, parsed.id, log_base)
             for chunk in corpus.chunks(chunk_size)]
    names: List[str] = []
    values: List[float] = []
    shapes: List[str] = []
    for index, (chunk_names, chunk_values, chunk_shapes) in enumerate(
            map_chunks(_scan_chunk, tasks, workers), start=1):
        names.extend(chunk_names)
        values.extend(chunk_values)
        shapes.extend(chunk_shapes)
        logger.info("chunk %d/%d: %d graphs", index, len(tasks),
                    len(chunk_names))
    ranking = pd.DataFrame({'graph': names,
                            'value': np.asarray(values, dtype=float),
                            'shape': shapes})
    ranking = ranking.sort_values('value', kind='mergesort',
                                  na_position='last', ignore_index=True)
    ranking.insert(0, 'rank', ranking['value'].rank(method='min'))
    defined = ranking['value'].dropna()
    if defined.empty:
        raise RangeError(f"{measure} is undefined on every member of "
                         f"{family}:{order}.")
    minimum = _extremum(ranking, float(defined.iloc[0]))
    maximum = _extremum(ranking, float(defined.iloc[-1]))
    spread = {}
    samples = 0
    if family == 'oriented-trees' and parsed.oriented:
        samples = orientation_samples
        logger.info("orientation spread: up to %d graphs per side, %d seeded "
                    "orientations each (sampled, not exhaustive)",
                    SPREAD_REPRESENTATIVES, samples)
        for side in (minimum, maximum):
            spread.update(_spread(side.graphs, parsed.id, samples, seed,
                                  log_base))
    return ScanResult(family, order, parsed.id, len(names), minimum, maximum,
                      ranking, spread, samples,
                      SPREAD_REPRESENTATIVES if samples else 0)
