# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import io
import json
import math
import unittest

import pandas as pd

from graphent import (Graph, ProbabilityVector, VerificationReport, Tolerance,
                      audit_vectors, compute_report, make_family,
                      parse_corpus, scan_extremal, verify_corpus)
from graphent._matrices import SIGNLESS_LAPLACIAN
from graphent._report import (measure_frame, measure_payload, scan_frame,
                              scan_payload, to_csv, to_json,
                              verification_frame, verification_payload)


class FormattingTests(unittest.TestCase):

    def test_json_floats(self):
        text = to_json({'a': 0.1 + 0.2, 'b': math.nan, 'c': [math.inf, 1],
                        'd': {0.5: True}})
        self.assertEqual(json.loads(text),
                         {'a': 0.3, 'b': None, 'c': [None, 1],
                          'd': {'0.5': True}})
        self.assertTrue(text.endswith('}\n'))

    def test_csv(self):
        frame = pd.DataFrame({'x': ['a', 'b'], 'y': [1 / 3, math.nan]})
        self.assertEqual(to_csv(frame), 'x,y\na,0.333333333333333\nb,\n')


class MeasureReportTests(unittest.TestCase):

    def setUp(self):
        self.report = compute_report(make_family('complete', 3),
                                     [SIGNLESS_LAPLACIAN], alphas=(2.0,))

    def test_payload(self):
        payload = json.loads(to_json(measure_payload(self.report)))
        self.assertEqual(payload['graph'], 'Bw')
        self.assertEqual(payload['log_base'], '2')
        q = payload['matrices'][0]
        self.assertEqual(q['kind'], 'q')
        self.assertEqual(q['i1'], 0.5)
        self.assertEqual(q['i2'], {'2': 1.0})
        self.assertEqual(q['i3'], {'2': 1.0})
        self.assertEqual(q['spectrum'], [4.0, 1.0, 1.0])
        self.assertIsNone(q['error'])

    def test_deterministic(self):
        again = compute_report(make_family('complete', 3),
                               [SIGNLESS_LAPLACIAN], alphas=(2.0,))
        self.assertEqual(to_json(measure_payload(self.report)),
                         to_json(measure_payload(again)))
        self.assertEqual(to_csv(measure_frame(self.report)),
                         to_csv(measure_frame(again)))

    def test_frame(self):
        frame = measure_frame(self.report)
        self.assertEqual(list(frame.columns),
                         ['graph', 'kind', 'quantity', 'alpha', 'value'])
        row = frame[(frame['kind'] == 'q') & (frame['quantity'] == 'i2')]
        self.assertEqual(row['alpha'].tolist(), [2.0])
        self.assertAlmostEqual(row['value'].iloc[0], 1.0)
        parsed = pd.read_csv(io.StringIO(to_csv(frame)))
        self.assertEqual(len(parsed), len(frame))

    def test_missing_values(self):
        report = compute_report(Graph(3), [SIGNLESS_LAPLACIAN], alphas=(2.0,))
        payload = json.loads(to_json(measure_payload(report)))
        self.assertIsNone(payload['matrices'][0]['i1'])
        self.assertTrue(payload['matrices'][0]['error'])
        self.assertIsNone(payload['indices']['wiener'])
        self.assertIn('q,i1,,\n', to_csv(measure_frame(report)))


class VerificationReportTests(unittest.TestCase):

    def test_corpus_payload(self):
        report = verify_corpus(parse_corpus('all:3'))
        report.runtime = 1.5
        payload = verification_payload(report)
        self.assertEqual(list(payload), ['corpus', 'tolerance', 'graphs',
                                         'evaluations', 'totals', 'summary',
                                         'claims'])
        self.assertEqual(payload['corpus'], 'all:3')
        self.assertEqual(payload['graphs'], 8)
        self.assertEqual(payload['claims'], [])
        self.assertEqual(payload['tolerance'],
                         {'absolute': 1e-9, 'relative': 1e-8, 'band': 1e-8})
        self.assertEqual(sum(payload['totals'].values()),
                         payload['evaluations'])
        self.assertEqual(verification_payload(report, timing=True)['runtime'],
                         1.5)

    def test_frame(self):
        report = audit_vectors([ProbabilityVector([0.9, 0.1], log_base='e')],
                               alphas=(0.5,))
        frame = verification_frame(report)
        self.assertEqual(list(frame.columns),
                         ['id', 'graph', 'status', 'residual', 'witness'])
        self.assertEqual(len(frame), 7)
        violated = frame[frame['status'] == 'violated']
        self.assertEqual(violated['id'].tolist(),
                         ['inequality:i2-below-scaled-i3@0.5'])
        witness = json.loads(violated['witness'].iloc[0])
        self.assertEqual(list(witness), sorted(witness))

    def test_empty_frame(self):
        report = VerificationReport.from_results('x', Tolerance(), [])
        self.assertEqual(to_csv(verification_frame(report)),
                         'id,graph,status,residual,witness\n')


class ScanReportTests(unittest.TestCase):

    def test_payload(self):
        result = scan_extremal('trees', 4, 'i1:incidence')
        payload = json.loads(to_json(scan_payload(result)))
        self.assertEqual(payload['count'], 16)
        self.assertEqual(payload['minimum']['shapes'], ['star'])
        self.assertEqual(payload['minimum']['count'], 4)
        self.assertEqual(payload['maximum']['shapes'], ['path'])
        self.assertEqual(payload['maximum']['count'], 12)
        self.assertNotIn('ranking', payload)
        self.assertNotIn('orientation_sampling', payload)
        ranked = scan_payload(result, ranking=True)['ranking']
        self.assertEqual(len(ranked), 16)
        self.assertEqual(ranked[0]['rank'], 1.0)

    def test_orientation_sampling_is_reported(self):
        result = scan_extremal('oriented-trees', 4, 'energy:skew',
                               orientation_samples=3)
        payload = json.loads(to_json(scan_payload(result)))
        self.assertEqual(payload['orientation_sampling'],
                         {'graphs_per_side': 8,
                          'orientations_per_graph': 3,
                          'exhaustive': False})
        self.assertTrue(payload['orientation_spread'])

    def test_frame(self):
        result = scan_extremal('trees', 4, 'm1')
        text = to_csv(scan_frame(result))
        self.assertTrue(text.startswith('rank,graph,value,shape\n'))
        self.assertEqual(text.count('\n'), 17)


if __name__ == '__main__':
    unittest.main()
