# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

"""Corpus specifications.

    all:<n>                    every labeled graph on n vertices
    all:<a>-<b>                every labeled graph for each n in a..b
    trees:<n>                  every labeled tree on n vertices
    gnp:<n>,<p>,<count>        count G(n, p) graphs, graph i seeded seed + i
    gnp:<a>-<b>,<p>,<count>    as above, orders cycling through a..b
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from ._errors import ParameterError
from ._graph import (MAX_ENUMERATION_ORDER, MAX_TREE_ORDER, Graph,
                     enumerate_labeled_graphs, enumerate_labeled_trees,
                     labeled_graph_count, labeled_tree_count, random_gnp)


@dataclass(frozen=True)
class Chunk:
    """A picklable slice of a corpus: ``source`` graphs start..stop."""
    source: Tuple
    start: int
    stop: int

    def __len__(self):
        return self.stop - self.start


@dataclass(frozen=True)
class CorpusSpec:
    text: str
    sources: Tuple[Tuple, ...]

    @property
    def size(self) -> int:
        return sum(_source_size(s) for s in self.sources)

    def chunks(self, chunk_size: int) -> List[Chunk]:
        if chunk_size < 1:
            raise ParameterError(f"Chunk size must be positive, got "
                                 f"{chunk_size}.")
        out = []
        for source in self.sources:
            total = _source_size(source)
            out.extend(Chunk(source, start, min(start + chunk_size, total))
                       for start in range(0, total, chunk_size))
        return out

    def graphs(self) -> Iterator[Graph]:
        for source in self.sources:
            yield from chunk_graphs(Chunk(source, 0, _source_size(source)))

    def __str__(self):
        return self.text


def _source_size(source) -> int:
    kind = source[0]
    if kind == 'all':
        return labeled_graph_count(source[1])
    if kind == 'trees':
        return labeled_tree_count(source[1])
    return source[3]


def chunk_graphs(chunk: Chunk) -> Iterator[Graph]:
    kind = chunk.source[0]
    if kind == 'all':
        yield from enumerate_labeled_graphs(chunk.source[1], chunk.start,
                                            chunk.stop)
    elif kind == 'trees':
        yield from enumerate_labeled_trees(chunk.source[1], chunk.start,
                                           chunk.stop)
    else:
        _, orders, p, _, seed = chunk.source
        for i in range(chunk.start, chunk.stop):
            yield random_gnp(orders[i % len(orders)], p, seed + i)


def _order_range(text: str, spec: str) -> Tuple[int, ...]:
    low, dash, high = text.partition('-')
    try:
        a = int(low)
        b = int(high) if dash else a
    except ValueError:
        raise ParameterError(f"Bad order range {text!r} in corpus {spec!r}.") \
            from None
    if a < 1 or b < a:
        raise ParameterError(f"Bad order range {text!r} in corpus {spec!r}.")
    return tuple(range(a, b + 1))


def parse_corpus(text: str, seed: int = 0) -> CorpusSpec:
    text = text.strip()
    kind, sep, rest = text.partition(':')
    if not sep:
        raise ParameterError(f"Expected <kind>:<arguments>, got {text!r}.")
    if kind == 'all':
        orders = _order_range(rest, text)
        if orders[-1] > MAX_ENUMERATION_ORDER:
            raise ParameterError(
                f"all:<n> supports n <= {MAX_ENUMERATION_ORDER}.")
        return CorpusSpec(text, tuple(('all', n) for n in orders))
    if kind == 'trees':
        orders = _order_range(rest, text)
        if orders[0] < 2 or orders[-1] > MAX_TREE_ORDER:
            raise ParameterError(
                f"trees:<n> supports 2 <= n <= {MAX_TREE_ORDER}.")
        return CorpusSpec(text, tuple(('trees', n) for n in orders))
    if kind == 'gnp':
        parts = rest.split(',')
        if len(parts) != 3:
            raise ParameterError(
                f"Expected gnp:<n>,<p>,<count>, got {text!r}.")
        orders = _order_range(parts[0], text)
        try:
            p = float(parts[1])
            count = int(parts[2])
        except ValueError:
            raise ParameterError(f"Bad gnp arguments in {text!r}.") from None
        if not 0.0 <= p <= 1.0 or count < 0:
            raise ParameterError(f"Bad gnp arguments in {text!r}.")
        return CorpusSpec(text, (('gnp', orders, p, count, seed),))
    raise ParameterError(f"Unknown corpus kind {kind!r}.")


def map_chunks(function, tasks: Sequence, workers: int = 1) -> Iterator:
    """``function`` over ``tasks``, in a process pool when ``workers`` > 1.
    Results come back in task order either way."""
    if workers <= 1 or len(tasks) <= 1:
        yield from map(function, tasks)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(function, tasks)
