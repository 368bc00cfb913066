# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import pandas as pd

from ._graph import Graph, OrientedGraph
from ._io import (encode_graph6, format_arc_list, format_edge_list,
                  parse_arc_list, parse_edge_list, parse_graph6)
from ._report import FLOAT_FORMAT
from ._types_and_formats import (ArcListFormat, ClaimResultsFormat,
                                 EdgeListFormat, Graph6Format,
                                 GraphMeasuresFormat)
from .plugin_setup import plugin


def _write_table(df: pd.DataFrame, ff):
    with ff.open() as fh:
        df.to_csv(fh, sep='\t', index=False, float_format=FLOAT_FORMAT,
                  lineterminator='\n')
    return ff


def _read_table(ff, text_columns, number_columns) -> pd.DataFrame:
    # empty cells stay empty strings in text columns and NaN in numeric ones
    return pd.read_csv(
        str(ff), sep='\t', keep_default_na=False,
        dtype={c: str for c in text_columns},
        na_values={c: [''] for c in number_columns})


@plugin.register_transformer
def _1(ff: EdgeListFormat) -> Graph:
    with ff.open() as fh:
        return parse_edge_list(fh.read())


@plugin.register_transformer
def _2(g: Graph) -> EdgeListFormat:
    ff = EdgeListFormat()
    with ff.open() as fh:
        fh.write(format_edge_list(g))
    return ff


@plugin.register_transformer
def _3(ff: Graph6Format) -> Graph:
    with ff.open() as fh:
        return parse_graph6(fh.read().strip())


@plugin.register_transformer
def _4(g: Graph) -> Graph6Format:
    ff = Graph6Format()
    with ff.open() as fh:
        fh.write(encode_graph6(g).decode('ascii') + '\n')
    return ff


@plugin.register_transformer
def _5(ff: ArcListFormat) -> OrientedGraph:
    with ff.open() as fh:
        return parse_arc_list(fh.read())


@plugin.register_transformer
def _6(g: OrientedGraph) -> ArcListFormat:
    ff = ArcListFormat()
    with ff.open() as fh:
        fh.write(format_arc_list(g))
    return ff


@plugin.register_transformer
def _7(df: pd.DataFrame) -> GraphMeasuresFormat:
    return _write_table(df, GraphMeasuresFormat())


@plugin.register_transformer
def _8(ff: GraphMeasuresFormat) -> pd.DataFrame:
    return _read_table(ff, ('graph', 'kind', 'quantity'), ('alpha', 'value'))


@plugin.register_transformer
def _9(df: pd.DataFrame) -> ClaimResultsFormat:
    return _write_table(df, ClaimResultsFormat())


@plugin.register_transformer
def _10(ff: ClaimResultsFormat) -> pd.DataFrame:
    return _read_table(ff, ('id', 'graph', 'status', 'witness'),
                       ('residual',))
