"""
Registry of verifiable claims about Θ, Θ̄ and their closures.

Each claim is a checker taking the lazily computed facts of one graph and
returning None when the claim holds, or a short description of the failure.
Checkers may also raise; the suite runner records that as a failure.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..analysis.realizability import realize_theta_bar
from ..analysis.recognition import (
    all_nonadjacent_theta, block_graph_via_theta_bar, delta_characterization,
    diameter_le_2_via_delta, find_isometric_long_cycle_or_diamond,
    four_point_condition, is_block_graph, is_tree, multipartite_parts,
    theta_bar_classes_distance_free, theta_bar_star_is_1trivial,
    tree_via_nonadjacent_delta,
)
from ..analysis.relations import (
    closure_classes, closures_coincide, delta_set, distinct_pairs, is_closed,
    nonadjacent_pairs, relation_graph,
)
from ..graph.blocks import cut_edges
from ..graph.distances import (
    bfs_all_pairs, connected_components, is_connected, is_isometric_subgraph,
)
from ..graph.induced import contains_induced, find_clique, induced_copies
from ..ingestion.graph6_parser import emit_graph6
from ..models import DistanceMatrix, EdgePartition, EdgeRelation, Graph, RelationKind

logger = logging.getLogger(__name__)


class UnknownClaimError(KeyError):
    """Raised when a claim id is not registered."""
    pass


class GraphFacts:
    """Per-graph values shared by all claim checkers, computed on first use."""

    def __init__(self, graph: Graph):
        self.graph = graph

    @cached_property
    def graph6(self) -> str:
        return emit_graph6(self.graph)

    @cached_property
    def d(self) -> DistanceMatrix:
        return bfs_all_pairs(self.graph)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def theta(self) -> EdgeRelation:
        return relation_graph(self.graph, RelationKind.THETA, self.d)

    @cached_property
    def theta_bar(self) -> EdgeRelation:
        return relation_graph(self.graph, RelationKind.THETA_BAR, self.d)

    @cached_property
    def theta_classes(self) -> EdgePartition:
        return closure_classes(self.theta)

    @cached_property
    def theta_bar_classes(self) -> EdgePartition:
        return closure_classes(self.theta_bar)

    def edge(self, e: int) -> str:
        return self.graph.edge_label(e)

    def pair(self, e: int, f: int) -> str:
        return f"({self.edge(e)}, {self.edge(f)})"


Checker = Callable[[GraphFacts], Optional[str]]


@dataclass(frozen=True)
class Claim:
    """A named statement checked graph by graph."""
    claim_id: str
    description: str
    check: Checker
    connected_only: bool = False
    needs_edges: bool = False

    def applies_to(self, facts: GraphFacts) -> bool:
        if self.connected_only and not facts.connected:
            return False
        if self.needs_edges and facts.graph.m == 0:
            return False
        return True


CLAIMS: Dict[str, Claim] = {}


def claim(
    claim_id: str, description: str, connected_only: bool = False, needs_edges: bool = False
) -> Callable[[Checker], Checker]:
    """Register the decorated checker under ``claim_id``."""
    def decorator(check: Checker) -> Checker:
        CLAIMS[claim_id] = Claim(claim_id, description, check, connected_only, needs_edges)
        return check
    return decorator


def get_claims(claim_ids: Optional[Sequence[str]] = None) -> List[Claim]:
    """
    Registered claims in registration order, or the requested subset.

    Raises:
        UnknownClaimError: If an id is not registered
    """
    if not claim_ids:
        return list(CLAIMS.values())
    missing = [c for c in claim_ids if c not in CLAIMS]
    if missing:
        raise UnknownClaimError(", ".join(missing))
    return [CLAIMS[c] for c in claim_ids]


def _same_component(facts: GraphFacts, e: int, f: int) -> bool:
    a = facts.graph.edges[e][0]
    x = facts.graph.edges[f][0]
    return facts.d.is_finite(a, x)


def _copy_edges(g: Graph, vertices: Sequence[int]) -> List[int]:
    chosen = set(vertices)
    return [i for i, (u, v) in enumerate(g.edges) if u in chosen and v in chosen]


# Distance sets

@claim("theta-delta-consecutive", "Θ-related edges have Δ = {k, k+1}")
def check_theta_delta(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    for e, f in distinct_pairs(g):
        if f in facts.theta.adjacency[e]:
            delta = delta_set(g, facts.d, e, f)
            if not delta.is_consecutive_pair:
                return f"{facts.pair(e, f)} Θ-related with Δ = {delta.to_list()}"
    return None


@claim("delta-bounds", "1 <= |Δ| <= 3 within {k, k+1, k+2}; Δ = {∞} across components")
def check_delta_bounds(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    for e in range(g.m):
        for f in range(e, g.m):
            delta = delta_set(g, facts.d, e, f)
            if not _same_component(facts, e, f):
                if delta.values != frozenset({math.inf}):
                    return f"{facts.pair(e, f)} across components with Δ = {delta.to_list()}"
                continue
            if not 1 <= len(delta) <= 3 or not delta.within_window():
                return f"{facts.pair(e, f)} has Δ = {delta.to_list()}"
            if len(delta) == 2 and not delta.is_consecutive_pair:
                return f"{facts.pair(e, f)} has non-consecutive Δ = {delta.to_list()}"
    return None


@claim("edge-distance-bound", "|d(x,a) - d(x,b)| <= 1 for every edge ab and vertex x",
       connected_only=True)
def check_edge_distance_bound(facts: GraphFacts) -> Optional[str]:
    d = facts.d
    for a, b in facts.graph.edges:
        for x in range(facts.graph.n):
            if abs(d(x, a) - d(x, b)) > 1:
                return f"vertex {x} against edge {a}{b}"
    return None


# Relations

@claim("labeling-invariance", "Θ does not depend on how edge endpoints are named")
def check_labeling_invariance(facts: GraphFacts) -> Optional[str]:
    g, d = facts.graph, facts.d
    for e, f in distinct_pairs(g):
        (a, b), (x, y) = g.edges[e], g.edges[f]
        verdicts = {
            d(p, r) + d(q, s) != d(p, s) + d(q, r)
            for p, q in ((a, b), (b, a))
            for r, s in ((x, y), (y, x))
        }
        if len(verdicts) != 1:
            return f"labelings disagree on {facts.pair(e, f)}"
    return None


@claim("relation-partition", "Θ and Θ̄ split the distinct edge pairs exactly")
def check_relation_partition(facts: GraphFacts) -> Optional[str]:
    for e, f in distinct_pairs(facts.graph):
        in_theta = f in facts.theta.adjacency[e]
        in_theta_bar = f in facts.theta_bar.adjacency[e]
        if in_theta == in_theta_bar:
            return f"{facts.pair(e, f)} in Θ: {in_theta}, in Θ̄: {in_theta_bar}"
    return None


@claim("shortest-path-not-theta", "distinct edges on a common shortest path are not Θ-related")
def check_shortest_path(facts: GraphFacts) -> Optional[str]:
    g, d = facts.graph, facts.d
    for e, f in distinct_pairs(g):
        if not _same_component(facts, e, f):
            continue
        (a, b), (x, y) = g.edges[e], g.edges[f]
        on_geodesic = any(
            d(p, s) == d(q, r) + 2
            for p, q in ((a, b), (b, a))
            for r, s in ((x, y), (y, x))
        )
        if on_geodesic and f in facts.theta.adjacency[e]:
            return f"{facts.pair(e, f)} lie on a shortest path but are Θ-related"
    return None


@claim("closure-duality", "Θ* and Θ̄* are never both split into several classes",
       needs_edges=True)
def check_closure_duality(facts: GraphFacts) -> Optional[str]:
    k, k_bar = facts.theta_classes.count, facts.theta_bar_classes.count
    if k > 1 and k_bar > 1:
        return f"Θ* has {k} classes and Θ̄* has {k_bar}"
    return None


@claim("closed-relation-duality",
       "a closed relation neither 1- nor |E|-trivial forces the other closure to be "
       "1-trivial and the other relation to be open",
       connected_only=True, needs_edges=True)
def check_closed_relation_duality(facts: GraphFacts) -> Optional[str]:
    m = facts.graph.m
    sides = (
        ("Θ", facts.theta, facts.theta_classes, facts.theta_bar, facts.theta_bar_classes),
        ("Θ̄", facts.theta_bar, facts.theta_bar_classes, facts.theta, facts.theta_classes),
    )
    for name, relation, classes, other, other_classes in sides:
        if is_closed(relation) and 1 < classes.count < m:
            if other_classes.count != 1 or is_closed(other):
                return f"{name} closed with {classes.count} classes, other side not forced"
    return None


@claim("closure-coincidence", "Θ* = Θ̄* only when both are 1-trivial", needs_edges=True)
def check_closure_coincidence(facts: GraphFacts) -> Optional[str]:
    if closures_coincide(facts.graph, facts.d):
        k, k_bar = facts.theta_classes.count, facts.theta_bar_classes.count
        if k != 1 or k_bar != 1:
            return f"closures coincide with {k} classes"
    return None


@claim("induced-path-classes", "edges of an induced path share a Θ̄* class")
def check_induced_paths(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    classes = facts.theta_bar_classes
    for b in range(g.n):
        for a, c in combinations(g.neighbors(b), 2):
            if g.has_edge(a, c):
                continue
            e, f = g.edge_id(a, b), g.edge_id(b, c)
            if not classes.same_class(e, f):
                return f"induced path {a}-{b}-{c} splits across Θ̄* classes"
    return None


@claim("cut-edge-trivial", "a cut edge makes Θ̄* 1-trivial", needs_edges=True)
def check_cut_edge(facts: GraphFacts) -> Optional[str]:
    bridges = cut_edges(facts.graph)
    if bridges and facts.theta_bar_classes.count != 1:
        u, v = bridges[0]
        return f"cut edge {u}{v} but Θ̄* has {facts.theta_bar_classes.count} classes"
    return None


def _share_triangle(g: Graph, e: int, f: int) -> bool:
    vertices = set(g.edges[e]) | set(g.edges[f])
    if len(vertices) != 3:
        return False
    u, v, w = sorted(vertices)
    return g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)


def _share_induced_diamond(g: Graph, e: int, f: int) -> bool:
    vertices = set(g.edges[e]) | set(g.edges[f])
    extras = [()] if len(vertices) == 4 else [(w,) for w in range(g.n) if w not in vertices]
    for extra in extras:
        chosen = sorted(vertices | set(extra))
        if len(chosen) != 4:
            continue
        degrees = sorted(sum(1 for u in chosen if g.has_edge(u, v)) for v in chosen)
        if degrees == [2, 2, 3, 3]:
            return True
    return False


@claim("k3-diamond-sufficiency",
       "edges sharing no K3 and no induced diamond share a Θ̄* class")
def check_k3_diamond(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    for e, f in distinct_pairs(g):
        if _share_triangle(g, e, f) or _share_induced_diamond(g, e, f):
            continue
        if not facts.theta_bar_classes.same_class(e, f):
            return f"{facts.pair(e, f)} share no K3 or diamond yet differ in Θ̄*"
    return None


@claim("k3-free-trivial", "K3-free graphs have 1-trivial Θ̄*", needs_edges=True)
def check_k3_free(facts: GraphFacts) -> Optional[str]:
    if find_clique(facts.graph, 3) is None and facts.theta_bar_classes.count != 1:
        return f"K3-free with {facts.theta_bar_classes.count} Θ̄* classes"
    return None


THETA_BAR_COHESIVE = ("P3", "paw", "C4", "gem", "K5", "claw", "X-house")
THETA_COHESIVE = ("K3", "diamond", "K2,3")


@claim("small-subgraph-classes",
       "induced paw, C4, gem, K5, star and X-house lie in one Θ̄* class; "
       "induced diamond, Kn and K2,3 lie in one Θ* class")
def check_small_subgraphs(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    for patterns, classes, symbol in (
        (THETA_BAR_COHESIVE, facts.theta_bar_classes, "Θ̄*"),
        (THETA_COHESIVE, facts.theta_classes, "Θ*"),
    ):
        for name in patterns:
            for copy in induced_copies(g, name):
                ids = {classes.class_of[e] for e in _copy_edges(g, copy)}
                if len(ids) > 1:
                    return f"induced {name} on {list(copy)} spans {len(ids)} {symbol} classes"
    return None


# Δ characterizations

@claim("delta-characterization",
       "|Δ| patterns over distinct pairs recognize complete graphs, K2, K2/K3 and trees",
       connected_only=True, needs_edges=True)
def check_delta_characterization(facts: GraphFacts) -> Optional[str]:
    result = delta_characterization(facts.graph, facts.d)
    if not result.consistent:
        return f"inconsistent sides {result.to_dict()}"
    return None


@claim("closed-theta-consequences",
       "when Θ is closed, Θ* is not 1-trivial iff some pair has |Δ| != 2",
       connected_only=True, needs_edges=True)
def check_closed_theta(facts: GraphFacts) -> Optional[str]:
    if not is_closed(facts.theta):
        return None
    g = facts.graph
    has_other = any(len(delta_set(g, facts.d, e, f)) != 2 for e, f in distinct_pairs(g))
    if (facts.theta_classes.count != 1) != has_other:
        return f"Θ closed with {facts.theta_classes.count} classes, |Δ| != 2 present: {has_other}"
    return None


@claim("triviality-equivalences",
       "Θ closed 1-trivial iff Θ̄ closed |E|-trivial iff K2 or K3; "
       "Θ closed |E|-trivial iff Θ̄ closed 1-trivial iff tree",
       connected_only=True, needs_edges=True)
def check_triviality_equivalences(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    m = g.m
    k, k_bar = facts.theta_classes.count, facts.theta_bar_classes.count
    theta_closed, bar_closed = is_closed(facts.theta), is_closed(facts.theta_bar)
    small_complete = g.n in (2, 3) and m == g.n * (g.n - 1) // 2

    first = {theta_closed and k == 1, bar_closed and k_bar == m, small_complete}
    if len(first) != 1:
        return "K2/K3 equivalence broken"
    second = {theta_closed and k == m, bar_closed and k_bar == 1, bool(is_tree(g))}
    if len(second) != 1:
        return "tree equivalence broken"
    return None


@claim("diameter-via-delta",
       "diameter <= 2 iff no non-adjacent pair has |Δ| = 3 iff all such Δ lie in {1, 2}",
       connected_only=True)
def check_diameter(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    answer = diameter_le_2_via_delta(g, facts.d)
    within = all(
        delta_set(g, facts.d, e, f).values <= {1, 2} for e, f in nonadjacent_pairs(g)
    )
    if bool(answer) and not within:
        return "diameter <= 2 but a non-adjacent Δ leaves {1, 2}"
    return None


@claim("tree-via-nonadjacent",
       "with a non-adjacent pair: |Δ| = 3 on all of them iff Θ̄ closed 1-trivial iff tree",
       connected_only=True)
def check_tree_nonadjacent(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    if next(nonadjacent_pairs(g), None) is None:
        return None
    answer = bool(tree_via_nonadjacent_delta(g, facts.d))
    closed_single = is_closed(facts.theta_bar) and facts.theta_bar_classes.count == 1
    if answer != closed_single:
        return f"tree test {answer} but Θ̄ closed and 1-trivial is {closed_single}"
    return None


@claim("block-graph-via-theta-bar",
       "block graph iff all non-adjacent pairs are Θ̄-related", connected_only=True)
def check_block_graph(facts: GraphFacts) -> Optional[str]:
    block_graph_via_theta_bar(facts.graph, facts.d)
    return None


@claim("block-graph-oracles",
       "block graph iff four-point condition iff no isometric long cycle or diamond",
       connected_only=True)
def check_block_oracles(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    structural = bool(is_block_graph(g))
    four_point = bool(four_point_condition(g, facts.d))
    no_obstruction = find_isometric_long_cycle_or_diamond(g, facts.d) is None
    if not structural == four_point == no_obstruction:
        return f"blocks {structural}, four-point {four_point}, obstructions absent {no_obstruction}"
    return None


@claim("nonadjacent-theta",
       "all non-adjacent pairs Θ-related iff |Δ| = 2 on them and paw-free "
       "iff Δ = {1, 2} on them and paw-free iff diameter <= 2 and {K4, 2K2, paw}-free",
       connected_only=True)
def check_nonadjacent_theta(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    answer = bool(all_nonadjacent_theta(g, facts.d))
    paw_free = contains_induced(g, "paw") is None
    deltas = [delta_set(g, facts.d, e, f) for e, f in nonadjacent_pairs(g)]
    sizes_two = all(len(delta) == 2 for delta in deltas) and paw_free
    one_two = all(delta.values == frozenset({1, 2}) for delta in deltas) and paw_free
    if not answer == sizes_two == one_two:
        return f"Θ on all non-adjacent pairs {answer}, |Δ| = 2 {sizes_two}, Δ = {{1,2}} {one_two}"
    return None


# Θ̄ closure structure

@claim("one-trivial-characterization",
       "distance-free 1-triviality test matches the Θ̄ closure", needs_edges=True)
def check_one_trivial(facts: GraphFacts) -> Optional[str]:
    predicted = theta_bar_star_is_1trivial(facts.graph)
    actual = facts.theta_bar_classes.count == 1
    if predicted != actual:
        return f"predicted 1-trivial {predicted}, Θ̄* has {facts.theta_bar_classes.count} classes"
    return None


@claim("multipartite-classes",
       "Θ̄* has several classes iff complete multipartite with 3 or 4 parts",
       connected_only=True, needs_edges=True)
def check_multipartite(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    parts = multipartite_parts(g)
    predicted = parts is not None and len(parts) in (3, 4)
    actual = facts.theta_bar_classes.count > 1
    if predicted != actual:
        return f"multipartite with 3-4 parts {predicted}, Θ̄* classes {facts.theta_bar_classes.count}"
    if actual and not all(
        delta_set(g, facts.d, e, f).values <= {1, 2} for e, f in nonadjacent_pairs(g)
    ):
        return "non-adjacent Δ outside {1, 2} in a split case"
    return None


@claim("class-count-one-or-three", "Θ̄* has 1 or 3 classes", needs_edges=True)
def check_class_count(facts: GraphFacts) -> Optional[str]:
    count = facts.theta_bar_classes.count
    if count not in (1, 3):
        return f"Θ̄* has {count} classes"
    return None


@claim("distance-free-agreement", "distance-free Θ̄* classes equal the computed ones")
def check_distance_free(facts: GraphFacts) -> Optional[str]:
    fast = theta_bar_classes_distance_free(facts.graph)
    if not fast.equivalent_to(facts.theta_bar_classes):
        return f"distance-free {fast.class_sizes()} vs computed {facts.theta_bar_classes.class_sizes()}"
    return None


@claim("realization-round-trip",
       "Θ̄ relation graphs with 3 classes realize back to their multipartite graph; "
       "others are rejected",
       connected_only=True, needs_edges=True)
def check_realization(facts: GraphFacts) -> Optional[str]:
    result = realize_theta_bar(facts.theta_bar)
    parts = multipartite_parts(facts.graph)
    if facts.theta_bar_classes.count == 3:
        if not result.realizable or result.part_sizes is None or parts is None:
            return f"rejected at {result.failure_stage}: {result.reason}"
        if sorted(result.part_sizes.sizes) != sorted(len(p) for p in parts):
            return f"realized as {result.part_sizes} instead of the input's parts"
    elif result.realizable:
        return f"1-trivial graph realized as {result.part_sizes}"
    return None


# Structure of small graphs

@claim("pairwise-intersecting-edges",
       "every two edges intersect iff K3 or a star", connected_only=True, needs_edges=True)
def check_pairwise_intersecting(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    intersecting = all(set(g.edges[e]) & set(g.edges[f]) for e, f in distinct_pairs(g))
    triangle = g.n == 3 and g.m == 3
    star_shaped = g.m == g.n - 1 and any(g.degree(v) == g.m for v in range(g.n))
    if intersecting != (triangle or star_shaped):
        return f"pairwise intersecting {intersecting}, K3 or star {triangle or star_shaped}"
    return None


@claim("paw-free-structure",
       "paw-free iff every component is K3-free or complete multipartite")
def check_paw_free(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    paw_free = contains_induced(g, "paw") is None
    structured = all(
        find_clique(part, 3) is None or multipartite_parts(part) is not None
        for part in (g.induced_subgraph(c) for c in connected_components(g))
    )
    if paw_free != structured:
        return f"paw-free {paw_free}, component structure {structured}"
    return None


@claim("cycle-classes",
       "even cycles C2n: Θ closed with n classes; odd cycles: Θ* 1-trivial, Θ open beyond K3",
       connected_only=True)
def check_cycles(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in range(g.n)):
        return None
    closed, count = is_closed(facts.theta), facts.theta_classes.count
    if g.n % 2 == 0 and (not closed or count != g.n // 2):
        return f"even cycle with {count} Θ* classes, closed {closed}"
    if g.n % 2 == 1 and (count != 1 or closed != (g.n == 3)):
        return f"odd cycle with {count} Θ* classes, closed {closed}"
    return None


@claim("isometric-diameter-two", "induced subgraphs of diameter <= 2 are isometric")
def check_isometric_diameter_two(facts: GraphFacts) -> Optional[str]:
    g = facts.graph
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            inner = bfs_all_pairs(g.induced_subgraph(subset))
            if inner.diameter <= 2 and not is_isometric_subgraph(g, subset, facts.d):
                return f"induced subgraph on {list(subset)} has diameter <= 2 but is not isometric"
    return None


def evaluate(claims: Sequence[Claim], graph: Graph) -> List[Tuple[str, Optional[str], bool]]:
    """
    Run ``claims`` on one graph.

    Returns:
        ``(claim_id, failure_detail, applied)`` per claim; exceptions raised
        by a checker become failures
    """
    facts = GraphFacts(graph)
    outcomes = []
    for item in claims:
        if not item.applies_to(facts):
            outcomes.append((item.claim_id, None, False))
            continue
        try:
            detail = item.check(facts)
        except Exception as e:
            logger.debug(f"Claim {item.claim_id} raised on {facts.graph6}: {e}")
            detail = f"{type(e).__name__}: {e}"
        outcomes.append((item.claim_id, detail, True))
    return outcomes
