# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from ._errors import (ContradictoryArcsError, DisconnectedGraphError,
                      GraphInputError, LoopEdgeError, NegativeIndexError,
                      RangeError)

Edge = Tuple[int, int]

MAX_ENUMERATION_ORDER = 7
MAX_TREE_ORDER = 9
MAX_ORIENTATION_SWEEP_EDGES = 16


def _normalize_edge(u: int, v: int, n: int) -> Edge:
    if u < 0 or v < 0:
        raise NegativeIndexError(f"Negative vertex index in edge ({u}, {v}).")
    if u == v:
        raise LoopEdgeError(f"Loop edge ({u}, {v}) is not allowed.")
    if u >= n or v >= n:
        raise GraphInputError(
            f"Edge ({u}, {v}) refers to a vertex outside 0..{n - 1}.")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as ``(min, max)`` pairs, so ``(1, 0)`` and ``(0, 1)``
    describe the same edge.
    """
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise RangeError(
                f"A graph needs at least one vertex, got {self.n}.")
        normalized = frozenset(
            _normalize_edge(int(u), int(v), self.n) for u, v in self.edges)
        object.__setattr__(self, 'edges', normalized)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> 'Graph':
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> Tuple[Edge, ...]:
        # lexicographic on (min endpoint, max endpoint); fixes incidence
        # column order
        return tuple(sorted(self.edges))

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def non_isolated(self) -> int:
        """Number of vertices with at least one neighbour."""
        return sum(1 for d in self.degrees if d > 0)

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        a.setflags(write=False)
        return a

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of a simple graph: one arc per underlying edge."""
    underlying: Graph
    arcs: frozenset

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        projected = set()
        for u, v in arcs:
            edge = _normalize_edge(u, v, self.underlying.n)
            if edge in projected:
                raise ContradictoryArcsError(
                    f"Edge {edge} carries arcs in both directions.")
            projected.add(edge)
        if projected != self.underlying.edges:
            raise GraphInputError(
                "Arcs do not project one-to-one onto the underlying edges.")
        object.__setattr__(self, 'arcs', arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Edge]) -> 'OrientedGraph':
        arcs = frozenset(arcs)
        return cls(Graph(n, arcs), arcs)

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def m(self) -> int:
        return self.underlying.m

    @cached_property
    def directions(self) -> Tuple[int, ...]:
        """+1 where the arc runs min->max, -1 otherwise, in edge_list order."""
        return tuple(1 if (u, v) in self.arcs else -1
                     for u, v in self.underlying.edge_list)

    def __repr__(self):
        return f"OrientedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceTable:
    distances: np.ndarray

    @property
    def n(self) -> int:
        return self.distances.shape[0]

    def __getitem__(self, index):
        return self.distances[index]


# connectivity and distances --------------------------------------------------

def _csr(g: Graph) -> csr_matrix:
    return csr_matrix(g.adjacency)


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    count, _ = connected_components(_csr(g), directed=False)
    return count == 1


def distances(g: Graph) -> DistanceTable:
    """All-pairs shortest path lengths of a connected graph."""
    if g.n == 1:
        return DistanceTable(np.zeros((1, 1), dtype=np.int64))
    d = shortest_path(_csr(g), method='D', directed=False, unweighted=True)
    if not np.all(np.isfinite(d)):
        raise DisconnectedGraphError(
            f"Distances are undefined: {g!r} is disconnected.")
    table = d.astype(np.int64)
    table.setflags(write=False)
    return DistanceTable(table)


# structural predicates --------------------------------------------------------

def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) == 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and g.max_degree == g.n - 1


def is_path(g: Graph) -> bool:
    if g.n == 1:
        return True
    return g.m == g.n - 1 and g.max_degree <= 2 and is_connected(g)


def is_perfect_matching(g: Graph) -> bool:
    return all(d == 1 for d in g.degrees)


def is_near_matching(g: Graph) -> bool:
    """Disjoint K2 copies plus one P3, on an odd number of vertices."""
    if g.n < 3 or g.n % 2 == 0:
        return False
    return sorted(g.degrees) == [1] * (g.n - 1) + [2]


def has_two_degree_split(g: Graph) -> bool:
    """Bidegreed graph with delta*n/(delta+Delta) vertices of degree Delta."""
    low, high = g.min_degree, g.max_degree
    if low == 0 or low == high or set(g.degrees) != {low, high}:
        return False
    return g.degrees.count(high) * (low + high) == low * g.n


# families and random graphs --------------------------------------------------

def make_family(kind: str, n: int) -> Graph:
    if n < 1:
        raise RangeError(f"Family order must be positive, got {n}.")
    if kind == 'complete':
        return Graph.from_edges(n, itertools.combinations(range(n), 2))
    if kind == 'path':
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == 'star':
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))
    if kind == 'cycle':
        if n < 3:
            raise RangeError(f"A cycle needs at least 3 vertices, got {n}.")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == 'matching':
        if n % 2:
            raise RangeError(f"A perfect matching needs even n, got {n}.")
        return Graph.from_edges(n, ((i, i + 1) for i in range(0, n, 2)))
    if kind == 'near-matching':
        if n < 3 or n % 2 == 0:
            raise RangeError(
                f"A near matching needs odd n >= 3, got {n}.")
        edges = [(0, 1), (1, 2)]
        edges.extend((i, i + 1) for i in range(3, n, 2))
        return Graph.from_edges(n, edges)
    if kind == 'empty':
        return Graph(n)
    raise RangeError(f"Unknown graph family {kind!r}.")


FAMILIES = ('complete', 'path', 'star', 'cycle', 'matching', 'near-matching',
            'empty')


def upper_pairs(n: int) -> Tuple[Edge, ...]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def random_gnp(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise RangeError(f"G(n, p) needs n >= 1, got {n}.")
    if not 0.0 <= p <= 1.0:
        raise RangeError(f"Edge probability must lie in [0, 1], got {p}.")
    pairs = upper_pairs(n)
    draws = np.random.default_rng(seed).random(len(pairs))
    return Graph.from_edges(n, (e for e, x in zip(pairs, draws) if x < p))


def _orient(g: Graph, flips: Iterable[bool]) -> OrientedGraph:
    arcs = frozenset((v, u) if flip else (u, v)
                     for (u, v), flip in zip(g.edge_list, flips))
    return OrientedGraph(g, arcs)


def canonical_orientation(g: Graph) -> OrientedGraph:
    return OrientedGraph(g, g.edges)


def random_orientation(g: Graph, seed: int) -> OrientedGraph:
    flips = np.random.default_rng(seed).random(g.m) < 0.5
    return _orient(g, flips)


def enumerate_orientations(g: Graph) -> Iterator[OrientedGraph]:
    if g.m > MAX_ORIENTATION_SWEEP_EDGES:
        raise RangeError(
            f"Refusing to sweep 2^{g.m} orientations "
            f"(limit m <= {MAX_ORIENTATION_SWEEP_EDGES}).")
    for flips in itertools.product((False, True), repeat=g.m):
        yield _orient(g, flips)


# exhaustive enumeration ------------------------------------------------------

def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def labeled_tree_count(n: int) -> int:
    return n ** (n - 2) if n >= 2 else 1


def enumerate_labeled_graphs(n: int, start: int = 0,
                             stop: Optional[int] = None) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in increasing upper-triangle mask
    order; bit k of the mask is the k-th pair of ``upper_pairs(n)``."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise RangeError(
            f"Labeled graph enumeration supports 1 <= n <= "
            f"{MAX_ENUMERATION_ORDER}, got {n}.")
    pairs = upper_pairs(n)
    total = labeled_graph_count(n)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield Graph.from_edges(
            n, (pair for k, pair in enumerate(pairs) if mask >> k & 1))


def prufer_decode(sequence, n: int) -> Graph:
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def enumerate_labeled_trees(n: int, start: int = 0,
                            stop: Optional[int] = None) -> Iterator[Graph]:
    """Every labeled tree on n vertices, decoded from Pruefer sequences in
    lexicographic order."""
    if not 2 <= n <= MAX_TREE_ORDER:
        raise RangeError(
            f"Labeled tree enumeration supports 2 <= n <= {MAX_TREE_ORDER}, "
            f"got {n}.")
    sequences = itertools.product(range(n), repeat=n - 2)
    for sequence in itertools.islice(sequences, start, stop):
        yield prufer_decode(sequence, n)
