# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math
import unittest

from graphent import (AlphaOneError, NotOrientedError, ParameterError,
                      canonical_orientation, enumerate_labeled_trees,
                      evaluate, evaluate_many, make_family, parse_measure)
from graphent._catalog import INDEX_MEASURES
from graphent._matrices import SKEW_ADJACENCY


class ParseMeasureTests(unittest.TestCase):

    def test_index_measures(self):
        for text in INDEX_MEASURES + ('wk:3',):
            measure = parse_measure(text)
            self.assertEqual(measure.id, text)
            self.assertFalse(measure.spectral)

    def test_spectral_measures(self):
        measure = parse_measure('i2:skew@0.5')
        self.assertEqual(measure.kind, SKEW_ADJACENCY)
        self.assertEqual(measure.alpha, 0.5)
        self.assertTrue(measure.oriented)
        self.assertEqual(parse_measure('i3:q').alpha, 2.0)
        self.assertEqual(parse_measure('energy:distance').family, 'energy')

    def test_errors(self):
        for text in ['nope', 'energy:', 'energy:laplacian', 'i1:q@2',
                     'wk:0', 'wk:two', 'randic-index:x', 'i2:q@inf']:
            with self.assertRaises(ParameterError, msg=text):
                parse_measure(text)
        with self.assertRaises(AlphaOneError):
            parse_measure('i2:q@1')


class EvaluateTests(unittest.TestCase):

    def test_index_values(self):
        p3 = make_family('path', 3)
        self.assertEqual(evaluate(parse_measure('m1'), p3), 6.0)
        self.assertEqual(evaluate(parse_measure('wiener'), p3), 2.0)
        self.assertEqual(evaluate(parse_measure('wk:2'), p3), 3.0)
        self.assertAlmostEqual(
            evaluate(parse_measure('randic-index:-1'), make_family('path', 4)),
            1.25)

    def test_spectral_values(self):
        k3 = make_family('complete', 3)
        self.assertAlmostEqual(evaluate(parse_measure('i1:q'), k3), 0.5)
        self.assertAlmostEqual(evaluate(parse_measure('i2:q@2'), k3), 1.0)
        self.assertAlmostEqual(evaluate(parse_measure('i3:q@2'), k3), 1.0)
        self.assertAlmostEqual(
            evaluate(parse_measure('energy:q'), make_family('cycle', 5)),
            10.0)
        self.assertAlmostEqual(
            evaluate(parse_measure('energy:incidence'),
                     make_family('complete', 2)), math.sqrt(2.0))

    def test_log_base(self):
        k3 = make_family('complete', 3)
        measure = parse_measure('i2:q@2')
        self.assertAlmostEqual(evaluate(measure, k3, 'e'), math.log(2.0))

    def test_oriented_measures(self):
        g = make_family('path', 3)
        with self.assertRaises(NotOrientedError):
            evaluate(parse_measure('energy:skew'), g)
        self.assertAlmostEqual(
            evaluate(parse_measure('energy:skew'), canonical_orientation(g)),
            2 * math.sqrt(2.0))
        # index measures read the underlying graph
        self.assertEqual(
            evaluate(parse_measure('m1'), canonical_orientation(g)), 6.0)

    def test_batch_matches_single(self):
        trees = list(enumerate_labeled_trees(5))
        for text in ['i1:incidence', 'energy:incidence', 'i3:norm-q@0.5',
                     'hyper-wiener']:
            measure = parse_measure(text)
            batch = evaluate_many(measure, trees)
            for g, value in zip(trees, batch):
                self.assertAlmostEqual(value, evaluate(measure, g),
                                       places=10)


if __name__ == '__main__':
    unittest.main()
