# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math
import unittest

import networkx as nx

from graphent import (DisconnectedGraphError, EmptyEdgeSetError, Graph,
                      adjacency_energy, build, canonical_orientation,
                      distance_moments, energy, evaluate, first_zagreb,
                      general_randic, general_randic_index, graph_spectrum,
                      make_family, parse_measure, random_orientation)
from graphent._matrices import (DISTANCE, INCIDENCE, RANDIC_ADJACENCY,
                                SIGNLESS_LAPLACIAN, SKEW_ADJACENCY)


class IndexTests(unittest.TestCase):

    def test_first_zagreb(self):
        self.assertEqual(first_zagreb(make_family('complete', 3)), 12.0)
        self.assertEqual(first_zagreb(make_family('star', 4)), 12.0)
        self.assertEqual(first_zagreb(Graph(3)), 0.0)

    def test_general_randic_index(self):
        self.assertAlmostEqual(
            general_randic_index(make_family('path', 4), -1.0), 1.25)
        self.assertAlmostEqual(
            general_randic_index(make_family('star', 4), -1.0), 1.0)
        self.assertEqual(general_randic_index(Graph(2), -1.0), 0.0)
        # beta = 0 counts edges
        self.assertEqual(
            general_randic_index(make_family('cycle', 6), 0.0), 6.0)

    def test_distance_moments_use_half_sums(self):
        moments = distance_moments(make_family('path', 3), ks=(3,))
        self.assertEqual(moments.wiener, 2.0)
        self.assertEqual(moments[2], 3.0)
        self.assertEqual(moments.hyper_wiener, 2.5)
        self.assertEqual(moments[3], 5.0)

    def test_wiener_matches_networkx(self):
        for kind, n in [('path', 6), ('star', 7), ('cycle', 5)]:
            g = make_family(kind, n)
            nxg = nx.Graph(list(g.edges))
            self.assertAlmostEqual(distance_moments(g).wiener,
                                   nx.wiener_index(nxg) / 2)

    def test_distance_moments_need_connectivity(self):
        with self.assertRaises(DisconnectedGraphError):
            distance_moments(Graph.from_edges(3, [(0, 1)]))

    def test_single_vertex(self):
        self.assertEqual(distance_moments(Graph(1)).wiener, 0.0)


class EnergyTests(unittest.TestCase):

    def test_incidence_energy_of_k2(self):
        self.assertAlmostEqual(energy(INCIDENCE, make_family('complete', 2)),
                               math.sqrt(2.0))

    def test_incidence_energy_matches_singular_values(self):
        g = make_family('star', 5)
        self.assertAlmostEqual(energy(INCIDENCE, g),
                               graph_spectrum(INCIDENCE, g).energy)

    def test_incidence_energy_needs_edges(self):
        with self.assertRaises(EmptyEdgeSetError):
            build(INCIDENCE, Graph(3))
        with self.assertRaises(EmptyEdgeSetError):
            energy(INCIDENCE, Graph(3))
        with self.assertRaises(EmptyEdgeSetError):
            evaluate(parse_measure('energy:incidence'), Graph(3))
        self.assertEqual(energy(SIGNLESS_LAPLACIAN, Graph(3)), 0.0)

    def test_skew_energy_of_k2(self):
        g = canonical_orientation(make_family('complete', 2))
        self.assertAlmostEqual(energy(SKEW_ADJACENCY, g), 2.0)

    def test_randic_energy_of_k3(self):
        self.assertAlmostEqual(
            energy(RANDIC_ADJACENCY, make_family('complete', 3)), 2.0)

    def test_distance_energy_of_p3(self):
        self.assertAlmostEqual(energy(DISTANCE, make_family('path', 3)),
                               2 + 2 * math.sqrt(3.0))

    def test_signless_laplacian_energy_is_twice_m(self):
        g = make_family('cycle', 7)
        self.assertAlmostEqual(energy(SIGNLESS_LAPLACIAN, g), 14.0)

    def test_adjacency_energy(self):
        self.assertAlmostEqual(adjacency_energy(make_family('complete', 4)),
                               6.0)
        self.assertAlmostEqual(adjacency_energy(make_family('path', 2)), 2.0)
        self.assertEqual(general_randic(0.0).beta, 0.0)

    def test_skew_energy_of_trees_ignores_orientation(self):
        g = make_family('path', 6)
        energies = [energy(SKEW_ADJACENCY, random_orientation(g, s))
                    for s in range(10)]
        self.assertLess(max(energies) - min(energies), 1e-9)


if __name__ == '__main__':
    unittest.main()
