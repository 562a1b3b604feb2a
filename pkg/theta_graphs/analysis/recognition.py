"""
Graph-class recognition through the edge relations.

Each Δ-based recognizer is paired with an independent structural test and
raises CharacterizationError when the two disagree. The block-graph
recognizer is structural (every block is a clique); the four-point condition
and the isometric cycle/diamond search are kept as slower oracles.
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from ..graph.blocks import block_vertex_sets
from ..graph.distances import (
    bfs_all_pairs, connected_components, edge_bearing_components, is_connected,
    is_isometric_subgraph,
)
from ..graph.generators import complete, diamond
from ..graph.induced import contains_induced, find_clique, is_free_of
from ..graph.isomorphism import is_isomorphic
from ..ingestion.graph6_parser import emit_graph6
from ..models import (
    DistanceMatrix, EdgePartition, Flag, Graph, PartSizes, RecognitionReport,
    RelationKind,
)
from .relations import (
    closure_classes, delta_profile, delta_set, is_closed,
    nonadjacent_pairs, relation_graph, theta_bar_related, theta_related,
    triviality,
)

logger = logging.getLogger(__name__)


class CharacterizationError(AssertionError):
    """Raised when a Δ-based answer disagrees with its structural reference."""
    pass


def _check_agreement(name: str, g: Graph, holds: bool, reference: bool) -> None:
    if holds != reference:
        logger.error(f"{name} disagrees with its reference on {emit_graph6(g)}")
        raise CharacterizationError(
            f"{name}: relation side {holds}, structural side {reference} "
            f"on {emit_graph6(g)}"
        )


def _edge_pair(g: Graph, pair: Tuple[int, int]) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    e, f = pair
    return g.edges[e], g.edges[f]


def _lift_pair(sub: Graph, pair: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
    labels = sub.labels or tuple(range(sub.n))
    return tuple((labels[u], labels[v]) for u, v in pair)


def _per_component(g: Graph, recognizer: Callable[[Graph], Flag]) -> Flag:
    """
    False for a disconnected graph; the evidence lists each component's
    own answer, with witness edges in ``g``'s vertex ids.
    """
    entries = []
    for vertices in connected_components(g):
        sub = g.induced_subgraph(vertices)
        flag = recognizer(sub)
        evidence = flag.evidence
        if isinstance(evidence, dict):
            evidence = dict(evidence, pair=_lift_pair(sub, evidence["pair"]))
        elif evidence is not None:
            evidence = _lift_pair(sub, evidence)
        entries.append({"vertices": vertices, "value": flag.value, "evidence": evidence})
    return Flag(False, {"components": entries})


def is_tree(g: Graph) -> Flag:
    """Connected with m = n - 1; evidence names why not."""
    components = connected_components(g)
    if len(components) != 1:
        return Flag(False, {"components": len(components)})
    if g.m != g.n - 1:
        return Flag(False, {"excess_edges": g.m - g.n + 1})
    return Flag(True)


def is_block_graph(g: Graph) -> Flag:
    """
    Every block (biconnected component) is a clique.

    Disconnected graphs are judged per component. The evidence of a negative
    answer is the vertex set of a block that is not a clique.
    """
    for block in block_vertex_sets(g):
        for u, v in combinations(block, 2):
            if not g.has_edge(u, v):
                return Flag(False, block)
    return Flag(True)


def four_point_condition(g: Graph, d: Optional[DistanceMatrix] = None) -> Flag:
    """
    For every four vertices, the two largest of the three pair-sums agree.

    Evidence is a violating quadruple.
    """
    if d is None:
        d = bfs_all_pairs(g)
    for x, y, u, v in combinations(range(g.n), 4):
        sums = sorted((d(x, y) + d(u, v), d(x, u) + d(y, v), d(x, v) + d(y, u)))
        if sums[1] != sums[2]:
            return Flag(False, (x, y, u, v))
    return Flag(True)


def find_isometric_long_cycle_or_diamond(
    g: Graph, d: Optional[DistanceMatrix] = None
) -> Optional[Tuple[int, ...]]:
    """Vertex set of an isometric cycle of length >= 4 or isometric diamond."""
    if d is None:
        d = bfs_all_pairs(g)
    pattern = diamond()
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub = g.induced_subgraph(subset)
            induced_cycle = sub.m == size and all(
                sub.degree(v) == 2 for v in range(size)
            ) and is_connected(sub)
            induced_diamond = size == 4 and is_isomorphic(sub, pattern)
            if (induced_cycle or induced_diamond) and is_isometric_subgraph(g, subset, d):
                return subset
    return None


def block_graph_via_theta_bar(g: Graph, d: Optional[DistanceMatrix] = None) -> Flag:
    """
    Every pair of non-adjacent edges is Θ̄-related.

    Evidence of a negative answer is a Θ-related non-adjacent pair.

    Raises:
        CharacterizationError: If the answer differs from is_block_graph
    """
    if d is None:
        d = bfs_all_pairs(g)
    witness = next(
        (pair for pair in nonadjacent_pairs(g) if not theta_bar_related(g, d, *pair)),
        None,
    )
    holds = witness is None
    _check_agreement("block_graph_via_theta_bar", g, holds, bool(is_block_graph(g)))
    return Flag(holds, _edge_pair(g, witness) if witness else None)


def diameter_le_2_via_delta(g: Graph, d: Optional[DistanceMatrix] = None) -> Flag:
    """
    Diameter at most 2, read off as: no non-adjacent pair has |Δ| = 3.

    Graphs with no non-adjacent edge pair fall back to the diameter itself.
    A disconnected graph answers False with per-component evidence.

    Raises:
        CharacterizationError: If the answer differs from the diameter
    """
    if len(connected_components(g)) > 1:
        return _per_component(g, diameter_le_2_via_delta)
    if d is None:
        d = bfs_all_pairs(g)
    reference = d.diameter <= 2
    pairs = list(nonadjacent_pairs(g))
    if not pairs:
        return Flag(reference)

    witness = next((p for p in pairs if len(delta_set(g, d, *p)) == 3), None)
    holds = witness is None
    _check_agreement("diameter_le_2_via_delta", g, holds, reference)
    if witness is None:
        return Flag(True)
    return Flag(False, {
        "pair": _edge_pair(g, witness),
        "delta": delta_set(g, d, *witness).to_list(),
    })


def all_nonadjacent_theta(g: Graph, d: Optional[DistanceMatrix] = None) -> Flag:
    """
    Every pair of non-adjacent edges is Θ-related.

    For connected graphs the answer is checked against: diameter <= 2 and no
    induced K4, 2K2 or paw.

    Raises:
        CharacterizationError: If a connected graph's answer differs from
            the structural one
    """
    if d is None:
        d = bfs_all_pairs(g)
    witness = next(
        (pair for pair in nonadjacent_pairs(g) if not theta_related(g, d, *pair)),
        None,
    )
    holds = witness is None
    if is_connected(g):
        reference = d.diameter <= 2 and is_free_of(g, "K4", "2K2", "paw")
        _check_agreement("all_nonadjacent_theta", g, holds, reference)
    return Flag(holds, _edge_pair(g, witness) if witness else None)


def tree_via_nonadjacent_delta(g: Graph, d: Optional[DistanceMatrix] = None) -> Flag:
    """
    Tree test for connected graphs with a non-adjacent edge pair:
    every non-adjacent pair has |Δ| = 3.

    Connected graphs without such a pair fall back to is_tree; a
    disconnected graph answers False with per-component evidence.

    Raises:
        CharacterizationError: If the answer differs from is_tree
    """
    if len(connected_components(g)) > 1:
        return _per_component(g, tree_via_nonadjacent_delta)
    if d is None:
        d = bfs_all_pairs(g)
    pairs = list(nonadjacent_pairs(g))
    reference = bool(is_tree(g))
    if not pairs:
        return Flag(reference)
    witness = next((p for p in pairs if len(delta_set(g, d, *p)) != 3), None)
    holds = witness is None
    _check_agreement("tree_via_nonadjacent_delta", g, holds, reference)
    return Flag(holds, _edge_pair(g, witness) if witness else None)


@dataclass
class DeltaCharacterization:
    """Both sides of each |Δ| characterization for a connected graph with edges."""
    no_three: Tuple[bool, bool]
    all_one: Tuple[bool, bool]
    all_two: Tuple[bool, bool, bool]
    all_three: Tuple[bool, bool, bool, bool]

    @property
    def consistent(self) -> bool:
        return all(len(set(sides)) == 1 for sides in (
            self.no_three, self.all_one, self.all_two, self.all_three
        ))

    def to_dict(self) -> Dict[str, List[bool]]:
        return {
            "complete_graph": list(self.no_three),
            "k2": list(self.all_one),
            "k2_or_k3": list(self.all_two),
            "tree": list(self.all_three),
        }


def delta_characterization(
    g: Graph, d: Optional[DistanceMatrix] = None
) -> DeltaCharacterization:
    """
    Evaluate the |Δ| characterizations over all distinct edge pairs:

    - no pair has |Δ| = 3            iff  G is complete
    - every pair has |Δ| = 1         iff  G is K2
    - every pair has |Δ| = 2         iff  G is K2 or K3  iff  Θ closed and 1-trivial
    - every pair has |Δ| = 3         iff  no pair has |Δ| = 2
                                     iff  Θ closed and |E|-trivial  iff  G is a tree
    """
    if d is None:
        d = bfs_all_pairs(g)
    sizes = delta_profile(g, d).sizes()
    relation = relation_graph(g, RelationKind.THETA, d)
    closed = is_closed(relation)
    classes = closure_classes(relation).count
    complete_graph = g.m == g.n * (g.n - 1) // 2

    return DeltaCharacterization(
        no_three=(3 not in sizes, complete_graph),
        all_one=(sizes <= {1}, g.n == 2),
        all_two=(sizes <= {2}, g.n in (2, 3) and complete_graph,
                 closed and classes == 1),
        all_three=(sizes <= {3}, 2 not in sizes,
                   closed and classes == g.m, bool(is_tree(g))),
    )


def multipartite_parts(g: Graph) -> Optional[List[List[int]]]:
    """
    Parts of ``g`` as a complete multipartite graph, or None.

    Parts are the classes of the non-adjacency relation and must be closed
    under it. They are ordered by smallest vertex.
    """
    if g.n == 0:
        return None
    everything = frozenset(range(g.n))
    groups: Dict[frozenset, List[int]] = {}
    for v in range(g.n):
        groups.setdefault(everything - g.adjacency[v], []).append(v)
    for key, members in groups.items():
        if key != frozenset(members):
            return None
    return sorted((sorted(m) for m in groups.values()), key=lambda part: part[0])


def is_complete_multipartite(g: Graph) -> Optional[PartSizes]:
    parts = multipartite_parts(g)
    if parts is None:
        return None
    return PartSizes(tuple(len(p) for p in parts))


def theta_bar_star_is_1trivial(g: Graph) -> bool:
    """
    Decide whether the closure of Θ̄ has a single class, without distances.

    Graphs with at most four vertices: not K3, diamond or K4. Larger graphs:
    K3-free, or containing a K5, an induced paw or an induced P4. A graph
    with several edge-bearing components is always 1-trivial; one
    edge-bearing component is judged on its own. Edgeless graphs have no
    class and answer False.
    """
    if g.m == 0:
        return False
    components = edge_bearing_components(g)
    if len(components) > 1:
        return True
    if not is_connected(g):
        g = g.induced_subgraph(components[0])

    if g.n <= 4:
        return not any(
            is_isomorphic(g, small) for small in (complete(3), diamond(), complete(4))
        )
    return (
        find_clique(g, 3) is None
        or find_clique(g, 5) is not None
        or contains_induced(g, "paw") is not None
        or contains_induced(g, "P4") is not None
    )


THREE_PART_CLASSES = {
    frozenset({0, 1}): 0, frozenset({0, 2}): 1, frozenset({1, 2}): 2,
}
FOUR_PART_CLASSES = {
    frozenset({0, 1}): 0, frozenset({2, 3}): 0,
    frozenset({0, 2}): 1, frozenset({1, 3}): 1,
    frozenset({0, 3}): 2, frozenset({1, 2}): 2,
}


def theta_bar_classes_distance_free(g: Graph) -> EdgePartition:
    """
    Closure classes of Θ̄ from the part structure alone.

    A complete multipartite graph with three parts splits into the edge sets
    between each pair of parts; with four parts, into the three pairings
    V1V2 + V3V4, V1V3 + V2V4, V1V4 + V2V3. Everything else has one class.
    Parts are numbered by smallest vertex.
    """
    if g.m == 0:
        return EdgePartition(())
    single = EdgePartition(tuple([0] * g.m))

    components = edge_bearing_components(g)
    if len(components) != 1:
        return single
    component = components[0]
    local = multipartite_parts(g.induced_subgraph(component))
    if local is None or len(local) not in (3, 4):
        return single

    part_of = {component[v]: index for index, part in enumerate(local) for v in part}
    table = THREE_PART_CLASSES if len(local) == 3 else FOUR_PART_CLASSES
    return EdgePartition(tuple(
        table[frozenset({part_of[u], part_of[v]})] for u, v in g.edges
    ))


class GraphRecognizer:
    """Builds a RecognitionReport for a graph."""

    def __init__(self, relation_method: str = "vectorized"):
        self.relation_method = relation_method

    def classify(self, g: Graph) -> RecognitionReport:
        """
        Run every recognizer on ``g``.

        Raises:
            CharacterizationError: If a Δ-based answer contradicts its
                structural reference
        """
        d = bfs_all_pairs(g)
        theta_rel = relation_graph(g, RelationKind.THETA, d, self.relation_method)
        theta_bar_rel = relation_graph(g, RelationKind.THETA_BAR, d, self.relation_method)
        theta_bar_partition = closure_classes(theta_bar_rel)

        parts = multipartite_parts(g)
        part_sizes = is_complete_multipartite(g)
        paw = contains_induced(g, "paw")
        triangle = find_clique(g, 3)
        diameter = d.diameter

        report = RecognitionReport(
            graph6=emit_graph6(g),
            n=g.n,
            m=g.m,
            connected=is_connected(g),
            diameter=None if math.isinf(diameter) else int(diameter),
            is_tree=is_tree(g),
            is_block_graph=is_block_graph(g),
            is_complete_multipartite=Flag(parts is not None, parts),
            part_sizes=part_sizes,
            is_paw_free=Flag(paw is None, paw),
            is_k3_free=Flag(triangle is None, triangle),
            diameter_le_2=diameter_le_2_via_delta(g, d),
            theta_class_count=closure_classes(theta_rel).count,
            theta_bar_class_count=theta_bar_partition.count,
            theta_bar_star_triviality=triviality(theta_bar_rel, theta_bar_partition),
            theta_bar_star_1trivial=theta_bar_star_is_1trivial(g),
            theta_closed=is_closed(theta_rel),
        )
        logger.debug(f"Classified {g}: {report.theta_bar_class_count} complement classes")
        return report


def classify(g: Graph) -> RecognitionReport:
    return GraphRecognizer().classify(g)
