# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import math

from qiime2.plugin import SemanticType, TextFileFormat, ValidationError, model

from ._errors import GraphInputError
from ._io import parse_arc_list, parse_edge_list, parse_graph6
from ._verify import Status

SimpleGraph = SemanticType("SimpleGraph")

OrientedSimpleGraph = SemanticType("OrientedSimpleGraph")

GraphMeasures = SemanticType("GraphMeasures")

ClaimResults = SemanticType("ClaimResults")

# records read at each validation level; None reads the whole file
VALIDATION_RECORDS = {'min': 50, 'max': None}

MEASURE_COLUMNS = ('graph', 'kind', 'quantity', 'alpha', 'value')
CLAIM_COLUMNS = ('id', 'graph', 'status', 'residual', 'witness')


def _records(fh, limit):
    """Non-blank, non-comment lines, up to ``limit`` of them."""
    out = []
    for line in fh:
        if line.split('#', 1)[0].strip():
            out.append(line)
            if limit is not None and len(out) >= limit:
                break
    return out


class _PairListFormat(TextFileFormat):
    parser = None

    def _validate_(self, level):
        with self.open() as fh:
            records = _records(fh, VALIDATION_RECORDS[level])
        if not records:
            raise ValidationError("No vertex-count header or edges found.")
        try:
            type(self).parser(''.join(records))
        except GraphInputError as error:
            raise ValidationError(str(error))


class EdgeListFormat(_PairListFormat):
    parser = staticmethod(parse_edge_list)


class ArcListFormat(_PairListFormat):
    parser = staticmethod(parse_arc_list)


class Graph6Format(TextFileFormat):

    def _validate_(self, level):
        with self.open() as fh:
            records = _records(fh, VALIDATION_RECORDS[level])
        if len(records) != 1:
            raise ValidationError(
                f"Expected exactly one graph6 record, found {len(records)}.")
        try:
            parse_graph6(records[0].strip())
        except GraphInputError as error:
            raise ValidationError(str(error))


class _TableFormat(TextFileFormat):
    columns = ()

    def _check_row(self, lineno, fields):
        pass

    def _validate_(self, level):
        limit = VALIDATION_RECORDS[level]
        with self.open() as fh:
            header = fh.readline().rstrip('\n').split('\t')
            if tuple(header) != self.columns:
                raise ValidationError(
                    f"Expected header {'<tab>'.join(self.columns)}, got "
                    f"{'<tab>'.join(header)}.")
            for lineno, line in enumerate(fh, start=2):
                if limit is not None and lineno - 1 > limit:
                    break
                fields = line.rstrip('\n').split('\t')
                if len(fields) != len(self.columns):
                    raise ValidationError(
                        f"Line {lineno} has {len(fields)} fields, expected "
                        f"{len(self.columns)}.")
                self._check_row(lineno, fields)


def _check_number(lineno, text, column):
    if text == '':
        return
    try:
        value = float(text)
    except ValueError:
        raise ValidationError(
            f"Line {lineno}: {column} {text!r} is not a number.")
    if math.isinf(value):
        raise ValidationError(f"Line {lineno}: {column} is infinite.")


class GraphMeasuresFormat(_TableFormat):
    columns = MEASURE_COLUMNS

    def _check_row(self, lineno, fields):
        _check_number(lineno, fields[3], 'alpha')
        _check_number(lineno, fields[4], 'value')


class ClaimResultsFormat(_TableFormat):
    columns = CLAIM_COLUMNS

    def _check_row(self, lineno, fields):
        statuses = {s.value for s in Status}
        if fields[2] not in statuses:
            raise ValidationError(
                f"Line {lineno}: unknown status {fields[2]!r}.")
        _check_number(lineno, fields[3], 'residual')


EdgeListDirectoryFormat = model.SingleFileDirectoryFormat(
    'EdgeListDirectoryFormat', 'graph.edges', EdgeListFormat)

Graph6DirectoryFormat = model.SingleFileDirectoryFormat(
    'Graph6DirectoryFormat', 'graph.g6', Graph6Format)

ArcListDirectoryFormat = model.SingleFileDirectoryFormat(
    'ArcListDirectoryFormat', 'graph.arcs', ArcListFormat)

GraphMeasuresDirectoryFormat = model.SingleFileDirectoryFormat(
    'GraphMeasuresDirectoryFormat', 'measures.tsv', GraphMeasuresFormat)

ClaimResultsDirectoryFormat = model.SingleFileDirectoryFormat(
    'ClaimResultsDirectoryFormat', 'claims.tsv', ClaimResultsFormat)
