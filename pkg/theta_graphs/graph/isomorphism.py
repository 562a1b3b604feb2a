"""
Isomorphism testing and canonical labelling for small graphs.

Both rest on colour refinement: vertices start coloured by degree and are
repeatedly recoloured by the multiset of their neighbours' colours until the
partition stops splitting. Colours are ranks of sorted signatures, so they do
not depend on the input labelling.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..models import Graph
from .generators import disjoint_union

logger = logging.getLogger(__name__)


def refine_colors(g: Graph, colors: Optional[Sequence[int]] = None) -> List[int]:
    """
    Run colour refinement to a stable colouring.

    Args:
        g: Graph to colour
        colors: Initial colouring, degrees when omitted

    Returns:
        Stable colouring as dense ranks
    """
    current = list(colors) if colors is not None else [g.degree(v) for v in range(g.n)]
    classes = len(set(current))
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [ranking[s] for s in signatures]
        if len(ranking) == classes:
            return refined
        current, classes = refined, len(ranking)


def find_isomorphism(g: Graph, h: Graph) -> Optional[Dict[int, int]]:
    """
    Find an isomorphism from ``g`` onto ``h``.

    Colours from refinement on the disjoint union restrict candidate images;
    vertices are mapped in an order that keeps each new vertex adjacent to
    as many already-mapped ones as possible.

    Returns:
        Mapping from vertices of ``g`` to vertices of ``h``, or None
    """
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    if g.n == 0:
        return {}

    colors = refine_colors(disjoint_union(g, h))
    g_colors, h_colors = colors[: g.n], colors[g.n:]
    if sorted(g_colors) != sorted(h_colors):
        return None

    by_color: Dict[int, List[int]] = {}
    for x in range(h.n):
        by_color.setdefault(h_colors[x], []).append(x)

    order = _search_order(g, g_colors, by_color)
    mapping: Dict[int, int] = {}
    used = [False] * h.n

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        mapped_neighbors = [w for w in g.adjacency[v] if w in mapping]
        for x in by_color[g_colors[v]]:
            if used[x]:
                continue
            if any(mapping[w] not in h.adjacency[x] for w in mapped_neighbors):
                continue
            if sum(1 for y in h.adjacency[x] if used[y]) != len(mapped_neighbors):
                continue
            mapping[v] = x
            used[x] = True
            if extend(depth + 1):
                return True
            del mapping[v]
            used[x] = False
        return False

    return dict(mapping) if extend(0) else None


def _search_order(
    g: Graph, colors: List[int], by_color: Dict[int, List[int]]
) -> List[int]:
    """Greedy order: most mapped neighbours first, then rarest colour."""
    order: List[int] = []
    placed = [False] * g.n
    links = [0] * g.n
    for _ in range(g.n):
        best = max(
            (v for v in range(g.n) if not placed[v]),
            key=lambda v: (links[v], -len(by_color[colors[v]]), g.degree(v), -v),
        )
        order.append(best)
        placed[best] = True
        for u in g.adjacency[best]:
            links[u] += 1
    return order


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def canonical_labeling(g: Graph) -> List[int]:
    """
    Vertex order giving the lexicographically smallest adjacency code.

    Individualization-refinement: the first non-singleton colour cell is split
    by individualizing each of its vertices in turn, skipping vertices that
    are twins of one already tried.
    """
    best: List[Tuple[int, List[int]]] = []

    def search(colors: List[int]) -> None:
        colors = refine_colors(g, colors)
        if len(set(colors)) == g.n:
            order = sorted(range(g.n), key=lambda v: colors[v])
            code = adjacency_code(g, order)
            if not best or code < best[0][0]:
                best[:] = [(code, order)]
            return

        counts: Dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, size in counts.items() if size > 1)
        cell = [v for v in range(g.n) if colors[v] == target]

        tried: List[int] = []
        for v in cell:
            if any(_are_twins(g, v, u) for u in tried):
                continue
            tried.append(v)
            split = [2 * c for c in colors]
            split[v] -= 1
            search(split)

    if g.n == 0:
        return []
    search([g.degree(v) for v in range(g.n)])
    return best[0][1]


def _are_twins(g: Graph, u: int, v: int) -> bool:
    return g.adjacency[u] - {v} == g.adjacency[v] - {u}


def adjacency_code(g: Graph, order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits in column order, read as an integer."""
    code = 0
    for j in range(1, len(order)):
        vj = order[j]
        for i in range(j):
            code = (code << 1) | (1 if order[i] in g.adjacency[vj] else 0)
    return code


def canonical_form(g: Graph) -> Tuple[int, int]:
    """``(n, code)``; equal exactly for isomorphic graphs."""
    return g.n, adjacency_code(g, canonical_labeling(g))
