# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import pandas as pd

from . import _verify
from ._compute import compute_report
from ._entropy import LogBase
from ._graph import Graph, OrientedGraph, random_orientation
from ._matrices import SKEW_ADJACENCY, SKEW_RANDIC, MatrixKind
from ._report import measure_frame, verification_frame


def _log_base(text: str) -> LogBase:
    return text if text == 'e' else float(text)


def compute_measures(graph: Graph,
                     alpha: float = 2.0,
                     log_base: str = '2',
                     matrix: str = None) -> pd.DataFrame:
    kinds = [MatrixKind.parse(matrix)] if matrix else None
    report = compute_report(graph, kinds, (alpha,), _log_base(log_base),
                            strict=matrix is not None)
    return measure_frame(report)


def orient_graph(graph: Graph, seed: int = 0) -> OrientedGraph:
    return random_orientation(graph, seed)


def compute_oriented_measures(graph: OrientedGraph,
                              alpha: float = 2.0,
                              log_base: str = '2') -> pd.DataFrame:
    report = compute_report(graph, [SKEW_ADJACENCY, SKEW_RANDIC], (alpha,),
                            _log_base(log_base))
    return measure_frame(report)


def verify_graph(graph: Graph,
                 alpha: float = 2.0,
                 log_base: str = '2',
                 seed: int = 0,
                 all_orientations: bool = False) -> pd.DataFrame:
    settings = _verify.VerifySettings(
        alphas=(alpha,), log_base=_log_base(log_base), seed=seed,
        all_orientations=all_orientations, keep_all=True)
    return verification_frame(_verify.verify_graph(graph, settings))
