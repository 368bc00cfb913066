# flake8: noqa
# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------
from ._errors import *
from ._graph import (
    Graph, OrientedGraph, DistanceTable, distances, is_connected,
    make_family, random_gnp, canonical_orientation, random_orientation,
    enumerate_orientations, enumerate_labeled_graphs,
    enumerate_labeled_trees, prufer_decode)
from ._io import (
    parse_edge_list, parse_arc_list, format_edge_list, format_arc_list,
    parse_graph6, parse_graph6_lines, encode_graph6, describe,
    parse_description)
from ._spectra import (
    DenseMatrix, Spectrum, SpectrumKind, symmetric_eigenvalues,
    singular_values, skew_absolute_eigenvalues, batch_symmetric_eigenvalues,
    batch_singular_values, spectral_moment, determinant)
from ._matrices import (
    MatrixKind, MatrixTag, general_randic, all_kinds, build, graph_spectrum,
    graph_spectra)
from ._measures import (
    first_zagreb, general_randic_index, distance_moments, energy,
    adjacency_energy)
from ._entropy import (
    ProbabilityVector, probabilities_from_spectrum, entropy_i1, entropy_i2,
    entropy_i3, shannon_entropy, functional_entropy, degree_weights,
    Entropies, closed_form_i1, closed_form, spectral_entropies)
from ._catalog import Measure, parse_measure, evaluate, evaluate_many
from ._corpus import CorpusSpec, parse_corpus
from ._verify import (
    Status, Tolerance, ClaimResult, VerificationReport, VerifySettings,
    check_equalities, check_trace_identities, check_bounds, verify_graph,
    verify_corpus, audit_inequalities, audit_corpus, audit_vectors)
from ._scan import ScanResult, scan_extremal
from ._compute import MeasureReport, compute_report

from ._version import get_versions

__version__ = get_versions()["version"]
del get_versions
