# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------
import importlib
from qiime2.plugin import Bool, Citations, Float, Int, Plugin, Range, Str

from graphent import __version__
from graphent._methods import (compute_measures, compute_oriented_measures,
                               orient_graph, verify_graph)
from graphent._types_and_formats import (
    SimpleGraph, OrientedSimpleGraph, GraphMeasures, ClaimResults,
    EdgeListFormat, Graph6Format, ArcListFormat, GraphMeasuresFormat,
    ClaimResultsFormat, EdgeListDirectoryFormat, Graph6DirectoryFormat,
    ArcListDirectoryFormat, GraphMeasuresDirectoryFormat,
    ClaimResultsDirectoryFormat)

citations = Citations.load("citations.bib", package="graphent")

plugin = Plugin(
    name="graphent",
    version=__version__,
    website="https://example.com",
    package="graphent",
    description=("Spectra, energies, topological indices and generalized "
                 "entropies of small graphs, with a verifier for the "
                 "identities that tie them together."),
    short_description="Generalized graph entropies.",
    citations=[citations['McKay-Piperno-2014']]
)

_alpha = Float % Range(0, None, inclusive_start=False)

_alpha_description = 'Order alpha of I2 and I3 (> 0 and != 1).'
_log_base_description = 'Logarithm base for I2: 2, e, 10 or any real > 0.'

plugin.methods.register_function(
    function=compute_measures,
    inputs={'graph': SimpleGraph},
    parameters={'alpha': _alpha, 'log_base': Str, 'matrix': Str},
    outputs=[('measures', GraphMeasures)],
    input_descriptions={'graph': 'The graph to measure.'},
    parameter_descriptions={
        'alpha': _alpha_description,
        'log_base': _log_base_description,
        'matrix': ('Restrict to one matrix kind, e.g. q, norm-l, distance '
                   'or general-randic:-1. Oriented kinds use a seeded '
                   'random orientation.')},
    output_descriptions={'measures': 'Indices, energies and entropies.'},
    name='Compute graph measures',
    description=("Topological indices, then energy, I1, I2 and I3 for each "
                 "matrix kind."),
    citations=[citations['Renyi1961']]
)

plugin.methods.register_function(
    function=orient_graph,
    inputs={'graph': SimpleGraph},
    parameters={'seed': Int % Range(0, None)},
    outputs=[('oriented_graph', OrientedSimpleGraph)],
    input_descriptions={'graph': 'The graph to orient.'},
    parameter_descriptions={'seed': 'Seed of the random orientation.'},
    output_descriptions={'oriented_graph': 'The oriented graph.'},
    name='Orient a graph',
    description="Gives every edge a direction chosen by a seeded coin flip.",
    citations=[]
)

plugin.methods.register_function(
    function=compute_oriented_measures,
    inputs={'graph': OrientedSimpleGraph},
    parameters={'alpha': _alpha, 'log_base': Str},
    outputs=[('measures', GraphMeasures)],
    input_descriptions={'graph': 'The oriented graph to measure.'},
    parameter_descriptions={'alpha': _alpha_description,
                            'log_base': _log_base_description},
    output_descriptions={'measures': 'Skew energies and entropies.'},
    name='Compute oriented graph measures',
    description=("Indices plus energy and entropies of the skew adjacency "
                 "and skew Randic matrices."),
    citations=[citations['Renyi1961']]
)

plugin.methods.register_function(
    function=verify_graph,
    inputs={'graph': SimpleGraph},
    parameters={'alpha': _alpha, 'log_base': Str,
                'seed': Int % Range(0, None), 'all_orientations': Bool},
    outputs=[('claims', ClaimResults)],
    input_descriptions={'graph': 'The graph to check.'},
    parameter_descriptions={
        'alpha': _alpha_description,
        'log_base': _log_base_description,
        'seed': 'Seed of the random orientation for oriented kinds.',
        'all_orientations': ('Check every orientation of graphs with at '
                             'most 10 edges.')},
    output_descriptions={'claims': 'One row per checked claim.'},
    name='Verify entropy identities',
    description=("Checks the closed-form entropy equalities, the trace "
                 "identities and the entropy bounds on one graph."),
    citations=[]
)

# Register semantic types
plugin.register_semantic_types(SimpleGraph, OrientedSimpleGraph,
                               GraphMeasures, ClaimResults)

# Register formats
plugin.register_formats(EdgeListFormat, Graph6Format, ArcListFormat,
                        GraphMeasuresFormat, ClaimResultsFormat,
                        EdgeListDirectoryFormat, Graph6DirectoryFormat,
                        ArcListDirectoryFormat, GraphMeasuresDirectoryFormat,
                        ClaimResultsDirectoryFormat)

plugin.register_artifact_class(SimpleGraph, EdgeListDirectoryFormat,
                               description="A simple undirected graph.")

plugin.register_artifact_class(OrientedSimpleGraph, ArcListDirectoryFormat,
                               description="An oriented simple graph.")

plugin.register_artifact_class(GraphMeasures, GraphMeasuresDirectoryFormat,
                               description="Measures of one graph.")

plugin.register_artifact_class(ClaimResults, ClaimResultsDirectoryFormat,
                               description="Verified claims for one graph.")

importlib.import_module('graphent._transformers')
