# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import re
from typing import List, Optional, Tuple, Union

from ._errors import (ByteRangeError, ContradictoryArcsError, Graph6Error,
                      MalformedTokenError, NegativeIndexError,
                      TrailingBytesError, TruncatedGraph6Error,
                      UnsupportedOrderError)
from ._graph import Graph, OrientedGraph, upper_pairs

GRAPH6_HEADER = b'>>graph6<<'
GRAPH6_MAX_ORDER = 62

_INTEGER = re.compile(r"-?[0-9]+")


def _parse_pairs(text: str) -> Tuple[Optional[int], List[Tuple[int, int]]]:
    """Shared grammar of edge and arc lists.

    One ``u v`` pair per line; blank lines and ``#`` comments are skipped;
    an ``n <count>`` line declares the vertex count.
    """
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == 'n':
            if len(tokens) != 2 or header is not None:
                raise MalformedTokenError(
                    f"line {lineno}: bad vertex-count header {raw!r}")
            header = _integer(tokens[1], lineno)
            if header < 1:
                raise MalformedTokenError(
                    f"line {lineno}: vertex count must be positive")
            continue
        if len(tokens) != 2:
            raise MalformedTokenError(
                f"line {lineno}: expected two vertex indices, got {raw!r}")
        u, v = (_integer(t, lineno) for t in tokens)
        if u < 0 or v < 0:
            raise NegativeIndexError(
                f"line {lineno}: negative vertex index in {raw!r}")
        pairs.append((u, v))
    return header, pairs


def _integer(token: str, lineno: int) -> int:
    if not _INTEGER.fullmatch(token):
        raise MalformedTokenError(
            f"line {lineno}: {token!r} is not a base-10 integer")
    return int(token)


def _order(header: Optional[int], pairs) -> int:
    implied = 1 + max((max(p) for p in pairs), default=0)
    return max(header or 1, implied)


def parse_edge_list(text: str) -> Graph:
    header, pairs = _parse_pairs(text)
    return Graph.from_edges(_order(header, pairs), pairs)


def parse_arc_list(text: str) -> OrientedGraph:
    header, pairs = _parse_pairs(text)
    arcs = set(pairs)
    for u, v in arcs:
        if (v, u) in arcs:
            raise ContradictoryArcsError(
                f"Arcs {u}->{v} and {v}->{u} are both present.")
    return OrientedGraph.from_arcs(_order(header, pairs), arcs)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return '\n'.join(lines) + '\n'


def format_arc_list(g: OrientedGraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs))
    return '\n'.join(lines) + '\n'


# graph6 -----------------------------------------------------------------------

def parse_graph6(data: Union[bytes, str]) -> Graph:
    if isinstance(data, str):
        data = data.encode('ascii', errors='replace')
    data = data.rstrip(b'\r\n')
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise TruncatedGraph6Error("Empty graph6 record.")
    for position, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ByteRangeError(
                f"Byte {byte} at position {position} is outside 63..126.")
    if data[0] == 126:
        raise UnsupportedOrderError(
            f"Only graph6 orders up to {GRAPH6_MAX_ORDER} are supported.")
    n = data[0] - 63
    if n == 0:
        raise Graph6Error("graph6 order 0 has no vertices.")
    pairs = upper_pairs(n)
    needed = -(-len(pairs) // 6)
    body = data[1:]
    if len(body) < needed:
        raise TruncatedGraph6Error(
            f"Order {n} needs {needed} data bytes, found {len(body)}.")
    if len(body) > needed:
        raise TrailingBytesError(
            f"{len(body) - needed} unexpected bytes after the graph6 record.")
    bits = []
    for byte in body:
        value = byte - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[len(pairs):]):
        raise Graph6Error("Non-zero padding bits in graph6 record.")
    return Graph.from_edges(n, (p for p, bit in zip(pairs, bits) if bit))


def parse_graph6_lines(text: Union[bytes, str]) -> List[Graph]:
    if isinstance(text, str):
        text = text.encode('ascii', errors='replace')
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def encode_graph6(g: Graph) -> bytes:
    if g.n > GRAPH6_MAX_ORDER:
        raise UnsupportedOrderError(
            f"Only graph6 orders up to {GRAPH6_MAX_ORDER} are supported.")
    bits = [1 if p in g.edges else 0 for p in upper_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        out.append(value + 63)
    return bytes(out)


def describe(g: Union[Graph, OrientedGraph]) -> str:
    """graph6 text, plus a ``:`` and one bit per edge (1 = max->min) for
    oriented graphs."""
    if isinstance(g, OrientedGraph):
        flips = ''.join('0' if d > 0 else '1' for d in g.directions)
        return f"{encode_graph6(g.underlying).decode('ascii')}:{flips}"
    return encode_graph6(g).decode('ascii')


def parse_description(text: str) -> Union[Graph, OrientedGraph]:
    g6, sep, flips = text.partition(":")
    g = parse_graph6(g6)
    if not sep:
        return g
    if len(flips) != g.m or set(flips) - {'0', '1'}:
        raise MalformedTokenError(f"Bad orientation bits in {text!r}.")
    arcs = frozenset((v, u) if f == '1' else (u, v)
                     for (u, v), f in zip(g.edge_list, flips))
    return OrientedGraph(g, arcs)
