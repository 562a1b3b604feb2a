"""
Distance relations on edges.

For edges e = ab and f = xy of a graph with distance d:

- e Θ f      iff  d(a,x) + d(b,y) != d(a,y) + d(b,x)   (and e Θ e always)
- e Θ̄ f      iff  e = f or the two sums are equal

Edges in different components have both sums infinite, so they are
Θ̄-related and never Θ-related. Relations are stored through their
relation graph (irreflexive pairs only) and closed transitively with a
union-find.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, Optional, Tuple

import numpy as np

from ..graph.distances import bfs_all_pairs
from ..graph.union_find import DisjointSet
from ..models import (
    DeltaSet, DistanceMatrix, EdgePartition, EdgeRelation, Graph,
    RelationKind, Triviality, TrivialityKind,
)

logger = logging.getLogger(__name__)


class RelationError(Exception):
    """Raised when relation inputs are inconsistent."""
    pass


class EdgeIndexError(RelationError, IndexError):
    """Raised for an EdgeId outside ``0..m-1``."""
    pass


RELATION_METHODS = ("vectorized", "pairwise")


def _endpoints(g: Graph, e: int) -> Tuple[int, int]:
    if not 0 <= e < g.m:
        raise EdgeIndexError(f"EdgeId {e} out of range for {g.m} edges")
    return g.edges[e]


def delta_set(g: Graph, d: DistanceMatrix, e: int, f: int) -> DeltaSet:
    """
    The set {d(a,x), d(b,y), d(a,y), d(b,x)} for e = ab and f = xy.

    Raises:
        EdgeIndexError: If ``e`` or ``f`` is not an EdgeId of ``g``
    """
    a, b = _endpoints(g, e)
    x, y = _endpoints(g, f)
    return DeltaSet(frozenset((d(a, x), d(b, y), d(a, y), d(b, x))))


def theta_related(g: Graph, d: DistanceMatrix, e: int, f: int) -> bool:
    """
    Evaluate Θ for a pair of EdgeIds.

    Raises:
        EdgeIndexError: If ``e`` or ``f`` is not an EdgeId of ``g``
    """
    a, b = _endpoints(g, e)
    x, y = _endpoints(g, f)
    if e == f:
        return True
    return d(a, x) + d(b, y) != d(a, y) + d(b, x)


def theta_bar_related(g: Graph, d: DistanceMatrix, e: int, f: int) -> bool:
    """
    Evaluate the reflexive complement Θ̄ for a pair of EdgeIds.

    Raises:
        EdgeIndexError: If ``e`` or ``f`` is not an EdgeId of ``g``
    """
    return e == f or not theta_related(g, d, e, f)


def _theta_matrix(g: Graph, d: DistanceMatrix) -> np.ndarray:
    """Boolean m x m matrix of irreflexive Θ pairs."""
    tails = np.fromiter((u for u, _ in g.edges), dtype=np.intp, count=g.m)
    heads = np.fromiter((v for _, v in g.edges), dtype=np.intp, count=g.m)
    values = d.values
    same = values[np.ix_(tails, tails)] + values[np.ix_(heads, heads)]
    crossed = values[np.ix_(tails, heads)] + values[np.ix_(heads, tails)]
    related = same != crossed
    np.fill_diagonal(related, False)
    return related


def relation_graph(
    g: Graph,
    which: RelationKind,
    d: Optional[DistanceMatrix] = None,
    method: str = "vectorized",
) -> EdgeRelation:
    """
    Build the relation graph of Θ or Θ̄ over the EdgeIds of ``g``.

    Args:
        g: Host graph
        which: RelationKind.THETA or RelationKind.THETA_BAR
        d: Host distances, computed when omitted
        method: ``vectorized`` evaluates all pairs with numpy at once,
            ``pairwise`` calls the scalar predicates pair by pair

    Returns:
        EdgeRelation with one vertex per EdgeId

    Raises:
        RelationError: For a custom relation kind or an unknown method
    """
    if which is RelationKind.CUSTOM:
        raise RelationError("Only THETA and THETA_BAR can be computed from a graph")
    if method not in RELATION_METHODS:
        raise RelationError(f"Unknown relation method: {method}")
    if d is None:
        d = bfs_all_pairs(g)

    if g.m == 0:
        return EdgeRelation((), which)

    if method == "pairwise":
        predicate = theta_related if which is RelationKind.THETA else theta_bar_related
        pairs = [
            (e, f) for e, f in combinations(range(g.m), 2) if predicate(g, d, e, f)
        ]
        return EdgeRelation.from_pairs(g.m, pairs, which)

    related = _theta_matrix(g, d)
    if which is RelationKind.THETA_BAR:
        related = ~related
        np.fill_diagonal(related, False)
    adjacency = tuple(frozenset(np.flatnonzero(row).tolist()) for row in related)
    logger.debug(f"{which.value} relation of {g}: {sum(map(len, adjacency)) // 2} pairs")
    return EdgeRelation(adjacency, which)


def theta(g: Graph, d: Optional[DistanceMatrix] = None) -> EdgeRelation:
    return relation_graph(g, RelationKind.THETA, d)


def theta_bar(g: Graph, d: Optional[DistanceMatrix] = None) -> EdgeRelation:
    return relation_graph(g, RelationKind.THETA_BAR, d)


def closure_classes(r: EdgeRelation) -> EdgePartition:
    """Classes of the transitive closure: components of the relation graph."""
    forest = DisjointSet(r.size)
    for e, f in r.pairs():
        forest.union(e, f)
    return EdgePartition(tuple(forest.labels()))


def triviality(r: EdgeRelation, p: EdgePartition) -> Triviality:
    """
    Classify a closure partition as 1-trivial, |E|-trivial or neither.

    Raises:
        RelationError: If ``p`` does not partition the edges of ``r``
    """
    if p.size != r.size:
        raise RelationError(f"Partition covers {p.size} edges, relation has {r.size}")
    return partition_triviality(p)


def partition_triviality(p: EdgePartition) -> Triviality:
    k = p.count
    if p.size > 0 and k == 1:
        return Triviality(TrivialityKind.ONE_TRIVIAL, k)
    if k == p.size:
        return Triviality(TrivialityKind.EDGE_TRIVIAL, k)
    return Triviality(TrivialityKind.NEITHER, k)


def is_closed(r: EdgeRelation) -> bool:
    """True when the relation equals its transitive closure."""
    partition = closure_classes(r)
    classes = partition.classes()
    return all(
        r.adjacency[e] == frozenset(classes[partition.class_of[e]]) - {e}
        for e in range(r.size)
    )


def distinct_pairs(g: Graph) -> Iterator[Tuple[int, int]]:
    return combinations(range(g.m), 2)


def nonadjacent_pairs(g: Graph) -> Iterator[Tuple[int, int]]:
    """Pairs of distinct edges without a common endpoint."""
    for e, f in combinations(range(g.m), 2):
        if not g.edges_adjacent(e, f):
            yield e, f


@dataclass
class DeltaProfile:
    """How often each |Δ| occurs, with one witness pair per size."""
    all_pairs: Counter = field(default_factory=Counter)
    nonadjacent: Counter = field(default_factory=Counter)
    witnesses: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    nonadjacent_witnesses: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    def sizes(self, nonadjacent_only: bool = False) -> set:
        counts = self.nonadjacent if nonadjacent_only else self.all_pairs
        return {size for size, count in counts.items() if count}


def delta_profile(g: Graph, d: Optional[DistanceMatrix] = None) -> DeltaProfile:
    """Tally |Δ| over all distinct edge pairs and over non-adjacent ones."""
    if d is None:
        d = bfs_all_pairs(g)
    profile = DeltaProfile()
    for e, f in distinct_pairs(g):
        size = len(delta_set(g, d, e, f))
        profile.all_pairs[size] += 1
        profile.witnesses.setdefault(size, (e, f))
        if not g.edges_adjacent(e, f):
            profile.nonadjacent[size] += 1
            profile.nonadjacent_witnesses.setdefault(size, (e, f))
    return profile


def closures_coincide(g: Graph, d: Optional[DistanceMatrix] = None) -> bool:
    """True when the closures of Θ and Θ̄ partition the edges identically."""
    if d is None:
        d = bfs_all_pairs(g)
    theta_classes = closure_classes(theta(g, d))
    theta_bar_classes = closure_classes(theta_bar(g, d))
    return theta_classes.equivalent_to(theta_bar_classes)
