# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import unittest

import networkx as nx
from qiime2.plugin.testing import TestPluginBase

from graphent import (ByteRangeError, ContradictoryArcsError, Graph,
                      Graph6Error, LoopEdgeError, MalformedTokenError,
                      NegativeIndexError, OrientedGraph, TrailingBytesError,
                      TruncatedGraph6Error, UnsupportedOrderError, describe,
                      encode_graph6, enumerate_labeled_graphs,
                      format_arc_list, format_edge_list, make_family,
                      parse_arc_list, parse_description, parse_edge_list,
                      parse_graph6, parse_graph6_lines, random_orientation)


class EdgeListTests(TestPluginBase):
    package = 'graphent.tests'

    def _read(self, filename):
        with open(self.get_data_path(filename)) as fh:
            return fh.read()

    def test_header_and_edges(self):
        g = parse_edge_list(self._read('k3.edges'))
        self.assertEqual(g, make_family('complete', 3))

    def test_order_from_edges(self):
        g = parse_edge_list(self._read('p3.edges'))
        self.assertEqual(g.n, 3)
        self.assertEqual(g.edges, frozenset({(0, 1), (1, 2)}))

    def test_header_keeps_isolated_vertices(self):
        g = parse_edge_list(self._read('empty.edges'))
        self.assertEqual((g.n, g.m), (3, 0))

    def test_errors(self):
        with self.assertRaises(LoopEdgeError):
            parse_edge_list(self._read('loop.edges'))
        with self.assertRaisesRegex(MalformedTokenError, 'line 2'):
            parse_edge_list(self._read('bad-token.edges'))
        with self.assertRaises(NegativeIndexError):
            parse_edge_list('0 -1\n')
        with self.assertRaises(MalformedTokenError):
            parse_edge_list('0 1 2\n')
        with self.assertRaises(MalformedTokenError):
            parse_edge_list('n 0\n')

    def test_format_round_trip(self):
        g = make_family('star', 5)
        self.assertEqual(parse_edge_list(format_edge_list(g)), g)
        self.assertEqual(format_edge_list(make_family('path', 2)),
                         'n 2\n0 1\n')


class ArcListTests(TestPluginBase):
    package = 'graphent.tests'

    def test_triangle(self):
        with open(self.get_data_path('triangle.arcs')) as fh:
            g = parse_arc_list(fh.read())
        self.assertIsInstance(g, OrientedGraph)
        self.assertEqual(g.arcs, frozenset({(0, 1), (1, 2), (2, 0)}))
        self.assertEqual(g.directions, (1, -1, 1))

    def test_contradictory(self):
        with open(self.get_data_path('contradictory.arcs')) as fh:
            text = fh.read()
        with self.assertRaises(ContradictoryArcsError):
            parse_arc_list(text)

    def test_format_round_trip(self):
        g = random_orientation(make_family('complete', 5), 4)
        self.assertEqual(parse_arc_list(format_arc_list(g)), g)


class Graph6Tests(unittest.TestCase):

    def test_small_records(self):
        self.assertEqual(parse_graph6('A_'), make_family('complete', 2))
        self.assertEqual(parse_graph6(b'A?'), Graph(2))
        self.assertEqual(parse_graph6('Bw'), make_family('complete', 3))
        self.assertEqual(parse_graph6('>>graph6<<A_\n'),
                         make_family('complete', 2))

    def test_encoding_matches_networkx(self):
        for n in range(1, 6):
            for g in enumerate_labeled_graphs(n):
                nxg = nx.Graph()
                nxg.add_nodes_from(range(n))
                nxg.add_edges_from(g.edges)
                self.assertEqual(encode_graph6(g) + b'\n',
                                 nx.to_graph6_bytes(nxg, header=False))

    def test_round_trip(self):
        for g in enumerate_labeled_graphs(6):
            self.assertEqual(parse_graph6(encode_graph6(g)), g)

    def test_errors(self):
        with self.assertRaises(ByteRangeError):
            parse_graph6(b'A ')
        with self.assertRaises(TruncatedGraph6Error):
            parse_graph6('C')
        with self.assertRaises(TruncatedGraph6Error):
            parse_graph6('')
        with self.assertRaises(TrailingBytesError):
            parse_graph6('A_?')
        with self.assertRaises(UnsupportedOrderError):
            parse_graph6('~??A')
        with self.assertRaisesRegex(Graph6Error, 'padding'):
            parse_graph6('A`')

    def test_lines(self):
        graphs = parse_graph6_lines('A_\n\nA?\n')
        self.assertEqual(graphs, [make_family('complete', 2), Graph(2)])


class DescriptionTests(unittest.TestCase):

    def test_plain_graph(self):
        g = make_family('cycle', 5)
        self.assertEqual(parse_description(describe(g)), g)

    def test_oriented_graph(self):
        g = random_orientation(make_family('complete', 4), 9)
        text = describe(g)
        self.assertEqual(len(text.split(':')[1]), 6)
        self.assertEqual(parse_description(text), g)

    def test_bad_bits(self):
        with self.assertRaises(MalformedTokenError):
            parse_description('Bw:10')


if __name__ == '__main__':
    unittest.main()
