# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math
import unittest

import numpy as np
import numpy.testing as npt
from hypothesis import given, settings, strategies as st
from skbio.diversity.alpha import shannon, simpson

from graphent import (AllZeroWeightsError, AlphaNonPositiveError,
                      AlphaOneError, EmptyEdgeSetError, Graph,
                      HypothesisError, IsolatedVertexError, ParameterError,
                      ProbabilityVector,
                      ZeroSpectrumError, all_kinds, canonical_orientation,
                      closed_form, closed_form_i1, degree_weights,
                      entropy_i1, entropy_i2, entropy_i3,
                      functional_entropy, graph_spectrum, make_family,
                      probabilities_from_spectrum, random_gnp,
                      shannon_entropy, spectral_entropies)
from graphent._entropy import resolve_log_base
from graphent._matrices import (DISTANCE, INCIDENCE, NORMALIZED_LAPLACIAN,
                                SIGNLESS_LAPLACIAN)


class ProbabilityVectorTests(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(ParameterError):
            ProbabilityVector([])
        with self.assertRaises(ParameterError):
            ProbabilityVector([0.5, 0.6])
        with self.assertRaises(ParameterError):
            ProbabilityVector([1.5, -0.5])
        with self.assertRaises(ParameterError):
            ProbabilityVector([1.0], log_base=1.0)

    def test_from_weights(self):
        p = ProbabilityVector.from_weights([1, 1, 2])
        np.testing.assert_allclose(p.p, [0.25, 0.25, 0.5])
        with self.assertRaises(AllZeroWeightsError):
            ProbabilityVector.from_weights([0, 0])

    def test_log_bases(self):
        self.assertEqual(resolve_log_base('e'), math.e)
        self.assertEqual(resolve_log_base('10'), 10.0)
        for bad in ['one', 0.0, -2.0, 1.0, math.inf]:
            with self.assertRaises(ParameterError):
                resolve_log_base(bad)


class EntropyTests(unittest.TestCase):

    def test_uniform(self):
        p = ProbabilityVector([0.25] * 4)
        self.assertAlmostEqual(entropy_i1(p), 0.75)
        self.assertAlmostEqual(entropy_i2(p, 2.0), 2.0)
        self.assertAlmostEqual(entropy_i2(p, 0.5), 2.0)
        # (4 * 4^-2 - 1) / (2^-1 - 1)
        self.assertAlmostEqual(entropy_i3(p, 2.0), 1.5)

    def test_point_mass(self):
        p = ProbabilityVector([1.0, 0.0, 0.0])
        self.assertEqual(entropy_i1(p), 0.0)
        self.assertEqual(entropy_i2(p, 3.0), 0.0)
        self.assertEqual(entropy_i3(p, 0.5), 0.0)

    def test_alpha_errors(self):
        p = ProbabilityVector([0.5, 0.5])
        with self.assertRaises(AlphaOneError):
            entropy_i2(p, 1.0)
        with self.assertRaises(AlphaNonPositiveError):
            entropy_i3(p, 0.0)
        with self.assertRaises(AlphaNonPositiveError):
            entropy_i3(p, -1.0)

    def test_log_base_scales_i2(self):
        p = ProbabilityVector([0.7, 0.2, 0.1])
        q = ProbabilityVector([0.7, 0.2, 0.1], log_base='e')
        self.assertAlmostEqual(entropy_i2(p, 3.0) * math.log(2.0),
                               entropy_i2(q, 3.0))
        self.assertEqual(entropy_i3(p, 3.0), entropy_i3(q, 3.0))

    @given(st.lists(st.integers(min_value=0, max_value=50), min_size=1,
                    max_size=12).filter(lambda c: sum(c) > 0))
    @settings(max_examples=100, deadline=None)
    def test_quadratic_entropy_matches_simpson(self, counts):
        p = ProbabilityVector.from_weights(counts)
        self.assertAlmostEqual(entropy_i1(p), simpson(np.array(counts)),
                               places=10)

    @given(st.lists(st.integers(min_value=0, max_value=50), min_size=1,
                    max_size=12).filter(lambda c: sum(c) > 0))
    @settings(max_examples=100, deadline=None)
    def test_shannon_matches_skbio(self, counts):
        p = ProbabilityVector.from_weights(counts)
        self.assertAlmostEqual(shannon_entropy(p),
                               shannon(np.array(counts), base=2), places=10)

    def test_renyi_tends_to_shannon(self):
        p = ProbabilityVector([0.5, 0.3, 0.15, 0.05])
        for alpha in (1 - 1e-6, 1 + 1e-6):
            self.assertAlmostEqual(entropy_i2(p, alpha), shannon_entropy(p),
                                   places=5)

    @given(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=2,
                    max_size=10),
           st.floats(min_value=0.1, max_value=5.0).filter(
               lambda a: abs(a - 1.0) > 1e-3))
    @settings(max_examples=100, deadline=None)
    def test_ranges(self, weights, alpha):
        p = ProbabilityVector.from_weights(weights)
        n = len(weights)
        self.assertGreaterEqual(entropy_i1(p), -1e-12)
        self.assertLessEqual(entropy_i1(p), 1 - 1 / n + 1e-12)
        self.assertGreaterEqual(entropy_i2(p, alpha), -1e-9)
        self.assertLessEqual(entropy_i2(p, alpha), math.log2(n) + 1e-9)
        self.assertGreaterEqual(entropy_i3(p, alpha), -1e-9)


class FunctionalEntropyTests(unittest.TestCase):

    def test_star_degrees(self):
        value = functional_entropy(degree_weights(make_family('star', 4)))
        self.assertAlmostEqual(value, 0.5 + 0.5 * math.log2(6.0))
        self.assertAlmostEqual(value, 1.7925, places=4)

    def test_errors(self):
        with self.assertRaises(AllZeroWeightsError):
            functional_entropy(degree_weights(Graph(3)))
        with self.assertRaises(ParameterError):
            functional_entropy([1.0, -1.0])


class GoldenValueTests(unittest.TestCase):

    def test_complete_graph_signless_laplacian(self):
        g = make_family('complete', 3)
        i1, i2, i3 = spectral_entropies(
            graph_spectrum(SIGNLESS_LAPLACIAN, g), 2.0)
        self.assertAlmostEqual(i1, 0.5, places=9)
        self.assertAlmostEqual(i2, 1.0, places=9)
        self.assertAlmostEqual(i3, 1.0, places=9)
        npt.assert_allclose(closed_form(SIGNLESS_LAPLACIAN, g, 2.0),
                            [0.5, 1.0, 1.0], atol=1e-12)
        self.assertAlmostEqual(closed_form_i1(SIGNLESS_LAPLACIAN, g), 0.5,
                               places=12)

    def test_star_normalized_laplacian(self):
        g = make_family('star', 4)
        self.assertAlmostEqual(closed_form_i1(NORMALIZED_LAPLACIAN, g), 0.625,
                               places=12)
        p = probabilities_from_spectrum(graph_spectrum(NORMALIZED_LAPLACIAN,
                                                       g))
        self.assertAlmostEqual(entropy_i1(p), 0.625, places=9)

    def test_path_distance(self):
        g = make_family('path', 3)
        expected = 1 - 3 / (4 + 2 * math.sqrt(3.0))
        self.assertAlmostEqual(closed_form_i1(DISTANCE, g), expected,
                               places=9)
        p = probabilities_from_spectrum(graph_spectrum(DISTANCE, g))
        self.assertAlmostEqual(entropy_i1(p), expected, places=9)

    def test_k2_incidence(self):
        g = make_family('complete', 2)
        self.assertAlmostEqual(closed_form_i1(INCIDENCE, g), 0.0, places=12)
        p = probabilities_from_spectrum(graph_spectrum(INCIDENCE, g))
        self.assertAlmostEqual(entropy_i1(p), 0.0, places=12)


class ClosedFormTests(unittest.TestCase):

    def test_hypotheses(self):
        with self.assertRaises(EmptyEdgeSetError):
            closed_form_i1(SIGNLESS_LAPLACIAN, Graph(3))
        with self.assertRaises(IsolatedVertexError):
            closed_form_i1(NORMALIZED_LAPLACIAN, Graph.from_edges(3, [(0, 1)]))
        with self.assertRaises(ZeroSpectrumError):
            closed_form_i1(DISTANCE, Graph(1))
        with self.assertRaises(ZeroSpectrumError):
            probabilities_from_spectrum(
                graph_spectrum(SIGNLESS_LAPLACIAN, Graph(3)))

    @given(st.integers(min_value=2, max_value=7),
           st.floats(min_value=0.3, max_value=1.0),
           st.integers(min_value=0, max_value=10 ** 6))
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_spectral_route(self, n, p, seed):
        g = random_gnp(n, p, seed)
        target = canonical_orientation(g)
        for kind in all_kinds():
            graph = target if kind.oriented else g
            try:
                closed = closed_form(kind, graph, 2.0)
                spectral = spectral_entropies(graph_spectrum(kind, graph),
                                              2.0)
            except HypothesisError:
                continue
            for a, b in zip(closed, spectral):
                self.assertAlmostEqual(a, b, places=8, msg=str(kind))


if __name__ == '__main__':
    unittest.main()
