"""
Exhaustive enumeration of small graphs up to isomorphism.

Graphs on n vertices are grown from every graph on n - 1 vertices by adding
a vertex joined to each possible neighbour subset. Candidates are reduced to
a canonical labelling and kept once per canonical code, which yields exactly
one representative per isomorphism class.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from ..graph.distances import is_connected
from ..graph.isomorphism import adjacency_code, canonical_labeling
from ..ingestion.graph6_parser import Graph6ParseError, Graph6Parser
from ..models import CorpusSource, CorpusSpec, Graph

logger = logging.getLogger(__name__)

BUILTIN_MAX_N = 8


class CorpusError(ValueError):
    """Raised when a corpus cannot be produced or read."""
    pass


@lru_cache(maxsize=None)
def graphs_on(n: int) -> Tuple[Graph, ...]:
    """
    One canonical representative per isomorphism class on ``n`` vertices.

    Representatives are sorted by edge count, then canonical code.
    """
    if n < 0:
        raise CorpusError(f"Vertex count must be non-negative: {n}")
    if n <= 1:
        return (Graph.from_edges(n, []),)

    representatives: Dict[int, Graph] = {}
    for parent in graphs_on(n - 1):
        for mask in range(1 << (n - 1)):
            new_edges = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            candidate = Graph.from_edges(n, list(parent.edges) + new_edges)
            order = canonical_labeling(candidate)
            code = adjacency_code(candidate, order)
            if code not in representatives:
                representatives[code] = candidate.relabel(order)

    ordered = sorted(representatives.items(), key=lambda item: (item[1].m, item[0]))
    logger.debug(f"Enumerated {len(ordered)} graphs on {n} vertices")
    return tuple(g for _, g in ordered)


def _builtin(spec: CorpusSpec) -> Iterator[Graph]:
    for n in range(spec.n_min, spec.n_max + 1):
        for g in graphs_on(n):
            if not spec.connected_only or is_connected(g):
                yield g


def _filtered(spec: CorpusSpec, graphs: List[Graph]) -> Iterator[Graph]:
    for g in graphs:
        if not spec.n_min <= g.n <= spec.n_max:
            continue
        if spec.connected_only and not is_connected(g):
            continue
        yield g


def enumerate_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    """
    Stream the graphs a corpus specification describes.

    Raises:
        CorpusError: If the built-in range is exceeded or the file is unreadable
    """
    if spec.source is CorpusSource.FILE:
        assert spec.path is not None
        try:
            graphs = Graph6Parser().parse_file(spec.path)
        except (Graph6ParseError, OSError) as e:
            raise CorpusError(f"Cannot read corpus {spec.path}: {e}") from e
        return _filtered(spec, graphs)
    if spec.n_max > BUILTIN_MAX_N:
        raise CorpusError(
            f"Built-in enumeration stops at n={BUILTIN_MAX_N}; "
            f"use a graph6 corpus file for n_max={spec.n_max}"
        )
    return _builtin(spec)


def count_graphs(spec: CorpusSpec) -> Dict[int, int]:
    """Number of corpus graphs per vertex count."""
    counts: Dict[int, int] = {}
    for g in enumerate_graphs(spec):
        counts[g.n] = counts.get(g.n, 0) + 1
    return counts


def corpus_list(spec: CorpusSpec) -> List[Graph]:
    return list(enumerate_graphs(spec))
