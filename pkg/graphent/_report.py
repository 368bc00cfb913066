# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

"""JSON and CSV renderings of reports.

Floats go out with 15 significant digits and non-finite values as null (JSON)
or empty cells (CSV), so equal inputs give byte-identical files.
"""

import json
import math
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from ._compute import MeasureReport
from ._scan import Extremum, ScanResult
from ._verify import ClaimResult, Status, VerificationReport

FLOAT_FORMAT = '%.15g'


def _number(x) -> Optional[float]:
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(format(x, '.15g'))


def _clean(value: Any) -> Any:
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _number(value)
    if isinstance(value, dict):
        return {_key(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_clean(v) for v in value]
    return value


def _key(key) -> str:
    if isinstance(key, float):
        return format(key, 'g')
    return str(key)


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(_clean(payload), indent=2, ensure_ascii=False) + '\n'


def to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT,
                        lineterminator='\n')


# verification -----------------------------------------------------------------

def claim_payload(claim: ClaimResult) -> Dict[str, Any]:
    return {'id': claim.claim, 'graph': claim.graph,
            'status': claim.status.value, 'residual': claim.residual,
            'witness': claim.witness}


def verification_payload(report: VerificationReport,
                         timing: bool = False) -> Dict[str, Any]:
    totals = {s.value: report.count(s) for s in Status if report.count(s)}
    payload = {
        'corpus': report.corpus,
        'tolerance': {'absolute': report.tolerance.absolute,
                      'relative': report.tolerance.relative,
                      'band': report.tolerance.band},
        'graphs': report.graphs,
        'evaluations': report.evaluations,
        'totals': totals,
        'summary': report.summary,
        'claims': [claim_payload(c) for c in report.claims],
    }
    if timing and report.runtime is not None:
        payload['runtime'] = report.runtime
    return payload


def verification_frame(report: VerificationReport) -> pd.DataFrame:
    rows = [{'id': c.claim, 'graph': c.graph, 'status': c.status.value,
             'residual': c.residual,
             'witness': json.dumps(_clean(c.witness), sort_keys=True)}
            for c in report.claims]
    return pd.DataFrame(
        rows, columns=['id', 'graph', 'status', 'residual', 'witness'])


# measures ---------------------------------------------------------------------

def measure_payload(report: MeasureReport) -> Dict[str, Any]:
    return {
        'graph': report.graph,
        'n': report.n,
        'm': report.m,
        'log_base': report.log_base,
        'alphas': list(report.alphas),
        'indices': report.indices,
        'matrices': [{'kind': k.kind, 'graph': k.graph,
                      'spectrum': k.spectrum, 'energy': k.energy,
                      'i1': k.i1, 'i2': k.i2, 'i3': k.i3, 'error': k.error}
                     for k in report.kinds],
        'measures': report.measures,
    }


def measure_frame(report: MeasureReport) -> pd.DataFrame:
    """Long format: one row per (kind, quantity, alpha)."""
    rows = []

    def add(kind, quantity, value, alpha=None):
        rows.append({'graph': report.graph, 'kind': kind,
                     'quantity': quantity, 'alpha': alpha, 'value': value})

    for name, value in report.indices.items():
        add('', name, value)
    for k in report.kinds:
        add(k.kind, 'energy', k.energy)
        add(k.kind, 'i1', k.i1)
        for alpha in report.alphas:
            add(k.kind, 'i2', k.i2.get(alpha), alpha)
            add(k.kind, 'i3', k.i3.get(alpha), alpha)
    for name, value in report.measures.items():
        add('', name, value)
    frame = pd.DataFrame(
        rows, columns=['graph', 'kind', 'quantity', 'alpha', 'value'])
    frame['alpha'] = frame['alpha'].astype(float)
    frame['value'] = frame['value'].astype(float)
    return frame


# scans ------------------------------------------------------------------------

def _extremum_payload(extremum: Extremum) -> Dict[str, Any]:
    return {'value': extremum.value, 'count': len(extremum.graphs),
            'shapes': list(extremum.shapes), 'graphs': list(extremum.graphs)}


def scan_payload(result: ScanResult, ranking: bool = False) -> Dict[str, Any]:
    payload = {
        'family': result.family,
        'order': result.order,
        'measure': result.measure,
        'count': result.count,
        'minimum': _extremum_payload(result.minimum),
        'maximum': _extremum_payload(result.maximum),
        'orientation_spread': result.orientation_spread,
    }
    if result.orientation_samples:
        payload['orientation_sampling'] = {
            'graphs_per_side': result.spread_representatives,
            'orientations_per_graph': result.orientation_samples,
            'exhaustive': False,
        }
    if ranking:
        payload['ranking'] = [
            {'rank': row.rank, 'graph': row.graph, 'value': row.value,
             'shape': row.shape}
            for row in result.ranking.itertuples(index=False)]
    return payload


def scan_frame(result: ScanResult) -> pd.DataFrame:
    return result.ranking[['rank', 'graph', 'value', 'shape']]
