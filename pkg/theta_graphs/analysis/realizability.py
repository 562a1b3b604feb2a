"""
Realize a relation graph as the complement relation Θ̄ of a graph.

When the closure of Θ̄ is not 1-trivial the graph is complete multipartite
with three or four parts, and the relation graph has exactly three
components: rook graphs K_p □ K_q for three parts, joins of two rook graphs
for four. Realization factors the components, solves for part sizes that
fit all three at once, rebuilds the multipartite graph and accepts only if
its Θ̄ relation graph is isomorphic to the input.
"""

import logging
from itertools import combinations_with_replacement, permutations
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..graph.distances import connected_components, is_connected
from ..graph.generators import complete_multipartite
from ..graph.isomorphism import find_isomorphism
from ..ingestion.graph6_parser import emit_graph6
from ..models import (
    EdgeRelation, Graph, JoinOfRooks, PartSizes, RealizationCase,
    RealizationResult, RelationKind, RookFactorization,
)
from .relations import relation_graph

logger = logging.getLogger(__name__)

RookSignature = Tuple[int, int]
JoinSignature = Tuple[RookSignature, RookSignature]

FOUR_PART_PAIRINGS = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)


def _neighbourhood_cliques(h: Graph, v: int) -> Optional[List[List[int]]]:
    """Split N(v) into the components of its induced subgraph if all are cliques."""
    neighbours = sorted(h.adjacency[v])
    local = h.induced_subgraph(neighbours)
    cliques = []
    for component in connected_components(local):
        size = len(component)
        inner = sum(local.degree(u) for u in component) // 2
        if inner != size * (size - 1) // 2:
            return None
        cliques.append([neighbours[u] for u in component])
    return cliques


def factor_as_rook(h: Graph) -> Optional[RookFactorization]:
    """
    Recognize ``h`` as a rook graph K_p □ K_q.

    The two cliques in the neighbourhood of vertex 0 give its row and its
    column; every other vertex is the unique common neighbour (besides
    vertex 0) of one row vertex and one column vertex. The resulting
    coordinates are then checked against every vertex pair. Complete graphs
    factor as K_n □ K_1.

    Returns:
        Factorization with host vertices mapped to (row, column), or None
    """
    n = h.n
    if n == 0 or not is_connected(h):
        return None
    if h.m == n * (n - 1) // 2:
        return RookFactorization(n, 1, {v: (v, 0) for v in range(n)})

    for v in range(n):
        cliques = _neighbourhood_cliques(h, v)
        if cliques is None or len(cliques) != 2:
            return None

    origin = 0
    first, second = _neighbourhood_cliques(h, origin) or [[], []]
    row = [origin] + first
    column = [origin] + second
    p, q = len(column), len(row)
    if p * q != n:
        return None

    coordinates: Dict[int, Tuple[int, int]] = {origin: (0, 0)}
    for c, w in enumerate(row[1:], start=1):
        coordinates[w] = (0, c)
    for r, u in enumerate(column[1:], start=1):
        coordinates[u] = (r, 0)

    for r in range(1, p):
        for c in range(1, q):
            common = (h.adjacency[column[r]] & h.adjacency[row[c]]) - {origin}
            if len(common) != 1:
                return None
            (vertex,) = common
            if vertex in coordinates:
                return None
            coordinates[vertex] = (r, c)

    if len(coordinates) != n:
        return None
    for u in range(n):
        for v in range(u + 1, n):
            (ru, cu), (rv, cv) = coordinates[u], coordinates[v]
            if h.has_edge(u, v) != (ru == rv or cu == cv):
                return None

    logger.debug(f"Rook factorization {p}x{q} of {h}")
    return RookFactorization(p, q, coordinates)


def _factor_side(h: Graph, side: Sequence[int]) -> Optional[RookFactorization]:
    sub = h.induced_subgraph(side)
    local = factor_as_rook(sub)
    if local is None:
        return None
    assert sub.labels is not None
    return RookFactorization(
        local.p, local.q,
        {sub.labels[v]: coord for v, coord in local.coordinates.items()},
    )


def join_of_rooks_candidates(h: Graph) -> Iterator[JoinOfRooks]:
    """
    Every split of ``h`` into two joined rook graphs, one per signature.

    Vertices on different sides of a join are adjacent, so each component
    of the complement lies wholly on one side. Complement components with
    more than one vertex are distributed over both sides in every way; the
    universal vertices of ``h`` (isolated in the complement) are
    interchangeable, so only how many go to each side matters.
    """
    if h.n < 2 or not is_connected(h):
        return
    components = connected_components(h.complement())
    if len(components) < 2:
        return

    universal = [c[0] for c in components if len(c) == 1]
    blocks = [c for c in components if len(c) > 1]
    seen: Set[JoinSignature] = set()

    for mask in range(1 << len(blocks)):
        left_core = [v for i, b in enumerate(blocks) if mask >> i & 1 for v in b]
        right_core = [v for i, b in enumerate(blocks) if not mask >> i & 1 for v in b]
        for k in range(len(universal) + 1):
            left = left_core + universal[:k]
            right = right_core + universal[k:]
            if not left or not right:
                continue
            left_rook = _factor_side(h, left)
            if left_rook is None:
                continue
            right_rook = _factor_side(h, right)
            if right_rook is None:
                continue
            candidate = JoinOfRooks(left_rook, right_rook)
            if candidate.signature not in seen:
                seen.add(candidate.signature)
                yield candidate


def factor_as_join_of_rooks(h: Graph) -> Optional[JoinOfRooks]:
    """First valid split of ``h`` into (K_p □ K_q) ▷◁ (K_r □ K_s), or None."""
    return next(join_of_rooks_candidates(h), None)


def _rook_signature(a: int, b: int) -> RookSignature:
    return (max(a, b), min(a, b))


def _join_signature(first: RookSignature, second: RookSignature) -> JoinSignature:
    ordered = sorted([first, second], reverse=True)
    return (ordered[0], ordered[1])


def three_part_sizes(signatures: Sequence[RookSignature]) -> List[Tuple[int, ...]]:
    """Part sizes n1 <= n2 <= n3 whose pairs match the component factor sizes."""
    values = sorted({x for signature in signatures for x in signature})
    wanted = sorted(signatures)
    solutions = []
    for n1, n2, n3 in combinations_with_replacement(values, 3):
        pairs = sorted([
            _rook_signature(n1, n2), _rook_signature(n1, n3), _rook_signature(n2, n3)
        ])
        if pairs == wanted:
            solutions.append((n1, n2, n3))
    return solutions


def four_part_sizes(options: Sequence[Set[JoinSignature]]) -> List[Tuple[int, ...]]:
    """
    Part sizes n1 <= ... <= n4 whose three pairings can be matched to the
    three components, each pairing among its component's join signatures.
    """
    values = sorted({
        x for signatures in options for signature in signatures
        for rook in signature for x in rook
    })
    solutions = []
    for sizes in combinations_with_replacement(values, 4):
        required = [
            _join_signature(
                _rook_signature(sizes[a], sizes[b]), _rook_signature(sizes[c], sizes[d])
            )
            for (a, b), (c, d) in FOUR_PART_PAIRINGS
        ]
        if any(
            all(required[order[i]] in options[i] for i in range(3))
            for order in permutations(range(3))
        ):
            solutions.append(sizes)
    return solutions


def _rejected(stage: str, reason: str, tried: int = 0) -> RealizationResult:
    logger.debug(f"Realization rejected at {stage}: {reason}")
    return RealizationResult(
        realizable=False, failure_stage=stage, reason=reason, candidates_tried=tried
    )


def realize_theta_bar(r: EdgeRelation) -> RealizationResult:
    """
    Decide whether ``r`` is the Θ̄ relation of a graph whose Θ̄ closure has
    more than one class, and rebuild such a graph.

    Stages, each a possible failure reason: ``component_count``,
    ``factorization``, ``part_sizes``, ``verification``.

    Returns:
        RealizationResult; rejection is a result, never an exception
    """
    h = r.as_graph()
    components = connected_components(h)
    if len(components) != 3:
        return _rejected(
            "component_count",
            f"relation graph has {len(components)} components, expected 3",
        )
    pieces = [h.induced_subgraph(c) for c in components]

    # Step 1: three parts, every component a rook graph
    candidates: List[Tuple[RealizationCase, Tuple[int, ...]]] = []
    rooks = [factor_as_rook(piece) for piece in pieces]
    if all(rook is not None for rook in rooks):
        signatures = [rook.signature for rook in rooks if rook is not None]
        candidates.extend(
            (RealizationCase.THREE_PARTS, sizes) for sizes in three_part_sizes(signatures)
        )

    # Step 2: four parts, every component a join of two rook graphs
    joins = [{j.signature for j in join_of_rooks_candidates(piece)} for piece in pieces]
    if all(joins):
        candidates.extend(
            (RealizationCase.FOUR_PARTS, sizes) for sizes in four_part_sizes(joins)
        )

    if not all(rook is not None for rook in rooks) and not all(joins):
        return _rejected(
            "factorization",
            "components are neither all rook graphs nor all joins of rook graphs",
        )
    if not candidates:
        return _rejected("part_sizes", "no part sizes fit all three components")

    # Step 3: rebuild and verify
    for tried, (case, sizes) in enumerate(candidates, start=1):
        rebuilt = complete_multipartite(list(sizes))
        if rebuilt.m != h.n:
            continue
        expected = relation_graph(rebuilt, RelationKind.THETA_BAR).as_graph()
        mapping = find_isomorphism(h, expected)
        if mapping is None:
            continue
        logger.debug(f"Realized as {rebuilt.name} after {tried} candidates")
        return RealizationResult(
            realizable=True,
            case=case,
            part_sizes=PartSizes(sizes),
            graph=rebuilt,
            graph6=emit_graph6(rebuilt),
            edge_map=dict(sorted(mapping.items())),
            candidates_tried=tried,
        )

    return _rejected(
        "verification",
        "no candidate's complement relation graph is isomorphic to the input",
        len(candidates),
    )


def perturbations(r: EdgeRelation) -> Iterator[Tuple[Tuple[int, int], EdgeRelation]]:
    """Every relation differing from ``r`` in exactly one pair, with that pair."""
    for e in range(r.size):
        for f in range(e + 1, r.size):
            adjacency = [set(a) for a in r.adjacency]
            if f in adjacency[e]:
                adjacency[e].discard(f)
                adjacency[f].discard(e)
            else:
                adjacency[e].add(f)
                adjacency[f].add(e)
            yield (e, f), EdgeRelation(tuple(frozenset(a) for a in adjacency), r.kind)
