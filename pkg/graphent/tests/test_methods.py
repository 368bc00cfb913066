# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math

from qiime2.plugin.testing import TestPluginBase
from qiime2.plugin.util import transform

from graphent import Graph, OrientedGraph, ZeroSpectrumError, make_family
from graphent._methods import (compute_measures, compute_oriented_measures,
                               orient_graph, verify_graph)
from graphent._types_and_formats import EdgeListFormat


def value(frame, kind, quantity):
    rows = frame[(frame['kind'] == kind) & (frame['quantity'] == quantity)]
    return rows['value'].iloc[0]


class ComputeMeasuresTests(TestPluginBase):
    package = 'graphent.tests'

    def test_simple1(self):
        graph = transform(self.get_data_path('k3.edges'),
                          from_type=EdgeListFormat, to_type=Graph)
        observed = compute_measures(graph, alpha=2.0, matrix='q')
        self.assertAlmostEqual(value(observed, 'q', 'i1'), 0.5)
        self.assertAlmostEqual(value(observed, 'q', 'i2'), 1.0)
        self.assertAlmostEqual(value(observed, '', 'm1'), 12.0)
        self.assertEqual(set(observed['kind']), {'', 'q'})

    def test_every_kind(self):
        observed = compute_measures(make_family('path', 4), alpha=0.5,
                                    log_base='e')
        self.assertEqual(len(set(observed['kind']) - {''}), 12)
        self.assertEqual(set(observed['alpha'].dropna()), {0.5})

    def test_named_kind_must_be_defined(self):
        with self.assertRaises(ZeroSpectrumError):
            compute_measures(Graph(3), matrix='q')
        observed = compute_measures(Graph(3))
        self.assertTrue(math.isnan(value(observed, 'q', 'i1')))


class OrientedMeasuresTests(TestPluginBase):
    package = 'graphent.tests'

    def test_orient_graph(self):
        g = make_family('cycle', 5)
        oriented = orient_graph(g, seed=3)
        self.assertIsInstance(oriented, OrientedGraph)
        self.assertEqual(oriented.underlying, g)
        self.assertEqual(orient_graph(g, seed=3), oriented)

    def test_skew_kinds(self):
        oriented = orient_graph(make_family('path', 3))
        observed = compute_oriented_measures(oriented)
        self.assertEqual(set(observed['kind']), {'', 'skew', 'skew-randic'})
        self.assertAlmostEqual(value(observed, 'skew', 'energy'),
                               2 * math.sqrt(2.0))


class VerifyGraphTests(TestPluginBase):
    package = 'graphent.tests'

    def test_no_failures(self):
        for fn in ['k3.edges', 's4.edges', 'p4.edges', 'empty.edges']:
            graph = transform(self.get_data_path(fn),
                              from_type=EdgeListFormat, to_type=Graph)
            observed = verify_graph(graph)
            self.assertGreater(len(observed), 0)
            self.assertFalse(observed['status'].isin(['fail']).any(), fn)

    def test_all_orientations(self):
        observed = verify_graph(make_family('cycle', 4), all_orientations=True)
        skew = observed[observed['id'] == 'equality:skew:i1']
        self.assertEqual(len(skew), 16)
