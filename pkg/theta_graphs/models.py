"""
Core data models for the edge-relation toolkit.

Graphs are finite, simple and undirected with vertices ``0..n-1``. Edges are
kept sorted lexicographically and an edge's position in that order is its
EdgeId; every relation and partition in the package is indexed by EdgeIds.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx
import numpy as np


SCHEMA_VERSION = 1


class GraphError(ValueError):
    """Raised when a graph cannot be constructed from the given data."""
    pass


class RelationKind(Enum):
    """Which relation an EdgeRelation encodes."""
    THETA = "theta"
    THETA_BAR = "theta_bar"
    CUSTOM = "custom"


class TrivialityKind(Enum):
    """Triviality classification of an edge partition."""
    ONE_TRIVIAL = "OneTrivial"
    EDGE_TRIVIAL = "EdgeTrivial"
    NEITHER = "Neither"


class RealizationCase(Enum):
    """Number of parts of the reconstructed complete multipartite graph."""
    THREE_PARTS = 3
    FOUR_PARTS = 4


class CorpusSource(Enum):
    """Where the property suite takes its graphs from."""
    BUILTIN = "builtin"
    FILE = "file"


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1."""
    n: int
    edges: Tuple[Tuple[int, int], ...] = ()
    labels: Optional[Tuple[Any, ...]] = field(default=None, compare=False)
    name: Optional[str] = field(default=None, compare=False)
    adjacency: Tuple[FrozenSet[int], ...] = field(
        init=False, repr=False, compare=False
    )
    _index: Dict[Tuple[int, int], int] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        """Normalize edges and validate vertex ranges."""
        if self.n < 0:
            raise GraphError(f"Vertex count must be non-negative: {self.n}")

        normalized = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise GraphError(f"Loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"Edge {u}{v} out of range for n={self.n}")
            key = (u, v) if u < v else (v, u)
            if key in normalized:
                raise GraphError(f"Multi-edge {key[0]}{key[1]}")
            normalized.add(key)

        edges = tuple(sorted(normalized))
        neighbors: List[set] = [set() for _ in range(self.n)]
        for u, v in edges:
            neighbors[u].add(v)
            neighbors[v].add(u)

        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("Vertex labels must match the vertex count")

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in neighbors))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(edges)})

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Iterable[Any]] = None,
        name: Optional[str] = None,
    ) -> "Graph":
        """Build a graph from any iterable of vertex pairs."""
        return cls(
            n=n,
            edges=tuple(tuple(e) for e in edges),  # type: ignore[misc]
            labels=tuple(labels) if labels is not None else None,
            name=name,
        )

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        return tuple(sorted(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adjacency), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def edge_id(self, u: int, v: int) -> int:
        """EdgeId of the edge ``uv``.

        Raises:
            GraphError: If ``uv`` is not an edge
        """
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"{u}{v} is not an edge") from None

    def edge_label(self, e: int) -> str:
        """Conventional ``uv`` label of an edge, separated when ambiguous."""
        u, v = self.edges[e]
        if self.n <= 10:
            return f"{u}{v}"
        return f"{u}-{v}"

    def edges_adjacent(self, e: int, f: int) -> bool:
        """True when distinct edges ``e`` and ``f`` share an endpoint."""
        return e != f and bool(set(self.edges[e]) & set(self.edges[f]))

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            matrix[u, v] = matrix[v, u] = True
        return matrix

    def to_networkx(self) -> nx.Graph:
        """networkx copy with vertices added in 0..n-1 order."""
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    def complement(self) -> "Graph":
        pairs = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self.adjacency[u]
        ]
        return Graph.from_edges(self.n, pairs, labels=self.labels)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled 0..k-1 in sorted order.

        The labels of the result hold the original vertex ids.
        """
        keep = sorted(set(vertices))
        position = {v: i for i, v in enumerate(keep)}
        pairs = [
            (position[u], position[v])
            for u, v in self.edges
            if u in position and v in position
        ]
        return Graph.from_edges(len(keep), pairs, labels=keep)

    def relabel(self, order: List[int]) -> "Graph":
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("Relabelling must be a permutation of the vertices")
        position = {v: i for i, v in enumerate(order)}
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in order]
        return Graph.from_edges(
            self.n,
            [(position[u], position[v]) for u, v in self.edges],
            labels=labels,
            name=self.name,
        )

    def __str__(self) -> str:
        title = self.name or "Graph"
        return f"{title}(n={self.n}, m={self.m})"


Distance = Union[int, float]


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs shortest-path distances; unreachable pairs hold ``inf``."""
    values: np.ndarray

    def __call__(self, u: int, v: int) -> Distance:
        value = self.values[u, v]
        return math.inf if np.isinf(value) else int(value)

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def diameter(self) -> Distance:
        """Largest distance, ``inf`` for a disconnected graph."""
        if self.n <= 1:
            return 0
        top = self.values.max()
        return math.inf if np.isinf(top) else int(top)

    def is_finite(self, u: int, v: int) -> bool:
        return bool(np.isfinite(self.values[u, v]))


@dataclass(frozen=True)
class PartSizes:
    """Part sizes of a complete multipartite graph, sorted non-increasing."""
    sizes: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes:
            raise GraphError("A multipartite graph needs at least one part")
        if any(s < 1 for s in self.sizes):
            raise GraphError(f"Part sizes must be positive: {self.sizes}")
        object.__setattr__(self, "sizes", tuple(sorted(self.sizes, reverse=True)))

    @property
    def ell(self) -> int:
        """Number of parts."""
        return len(self.sizes)

    @property
    def vertex_count(self) -> int:
        return sum(self.sizes)

    @property
    def edge_count(self) -> int:
        total = self.vertex_count
        return (total * total - sum(s * s for s in self.sizes)) // 2

    def __str__(self) -> str:
        return "K_{" + ",".join(str(s) for s in sorted(self.sizes)) + "}"


@dataclass(frozen=True)
class DeltaSet:
    """The set of the four cross distances between two edges."""
    values: FrozenSet[Distance]

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, value: object) -> bool:
        return value in self.values

    def __iter__(self) -> Iterator[Distance]:
        return iter(self.sorted())

    def sorted(self) -> List[Distance]:
        return sorted(self.values)

    @property
    def minimum(self) -> Distance:
        return min(self.values)

    @property
    def is_consecutive_pair(self) -> bool:
        """True when the set is exactly ``{k, k+1}`` for some finite k."""
        if len(self.values) != 2:
            return False
        low, high = self.sorted()
        return math.isfinite(high) and high - low == 1

    def within_window(self) -> bool:
        """True when every value lies in ``{k, k+1, k+2}`` with k the minimum."""
        low = self.minimum
        if math.isinf(low):
            return len(self.values) == 1
        return all(v - low <= 2 for v in self.values)

    def to_list(self) -> List[Union[int, str]]:
        return [v if math.isfinite(v) else "inf" for v in self.sorted()]


@dataclass(frozen=True)
class EdgeRelation:
    """Symmetric reflexive relation on EdgeIds ``0..size-1``.

    Only the irreflexive part is stored: ``adjacency[e]`` holds the f != e
    related to e, which is exactly the relation graph.
    """
    adjacency: Tuple[FrozenSet[int], ...]
    kind: RelationKind = RelationKind.CUSTOM

    def __post_init__(self) -> None:
        size = len(self.adjacency)
        for e, related in enumerate(self.adjacency):
            if e in related:
                raise GraphError(f"Relation graph has a loop at {e}")
            for f in related:
                if not 0 <= f < size:
                    raise GraphError(f"EdgeId {f} out of range for {size} edges")
                if e not in self.adjacency[f]:
                    raise GraphError(f"Relation is not symmetric at ({e}, {f})")

    @classmethod
    def from_pairs(
        cls,
        size: int,
        pairs: Iterable[Tuple[int, int]],
        kind: RelationKind = RelationKind.CUSTOM,
    ) -> "EdgeRelation":
        """Build from unordered pairs; reflexive pairs are ignored."""
        neighbors: List[set] = [set() for _ in range(size)]
        for e, f in pairs:
            if not (0 <= e < size and 0 <= f < size):
                raise GraphError(f"Pair ({e}, {f}) out of range for {size} edges")
            if e != f:
                neighbors[e].add(f)
                neighbors[f].add(e)
        return cls(tuple(frozenset(s) for s in neighbors), kind)

    @classmethod
    def from_graph(
        cls, relation_graph: Graph, kind: RelationKind = RelationKind.CUSTOM
    ) -> "EdgeRelation":
        return cls(relation_graph.adjacency, kind)

    @property
    def size(self) -> int:
        return len(self.adjacency)

    def related(self, e: int, f: int) -> bool:
        return e == f or f in self.adjacency[e]

    def pairs(self) -> List[Tuple[int, int]]:
        """Irreflexive related pairs ``(e, f)`` with ``e < f``, sorted."""
        return [(e, f) for e in range(self.size) for f in sorted(self.adjacency[e]) if e < f]

    @property
    def pair_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def as_graph(self) -> Graph:
        """The relation graph, one vertex per EdgeId."""
        return Graph.from_edges(self.size, self.pairs())


@dataclass(frozen=True)
class EdgePartition:
    """Partition of EdgeIds into classes numbered densely from 0."""
    class_of: Tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.class_of)
        if used != set(range(len(used))):
            raise GraphError("Partition class ids must be dense from 0")

    @classmethod
    def from_classes(cls, size: int, classes: Iterable[Iterable[int]]) -> "EdgePartition":
        """Build from explicit classes, renumbered by smallest member."""
        blocks = sorted((sorted(c) for c in classes if c), key=lambda c: c[0])
        class_of = [-1] * size
        for index, block in enumerate(blocks):
            for e in block:
                class_of[e] = index
        if -1 in class_of:
            raise GraphError("Classes do not cover every edge")
        return cls(tuple(class_of))

    @property
    def size(self) -> int:
        return len(self.class_of)

    @property
    def count(self) -> int:
        return len(set(self.class_of))

    def classes(self) -> List[List[int]]:
        """Classes as sorted EdgeId lists, ordered by class id."""
        blocks: List[List[int]] = [[] for _ in range(self.count)]
        for e, c in enumerate(self.class_of):
            blocks[c].append(e)
        return blocks

    def class_sizes(self) -> List[int]:
        return sorted(len(c) for c in self.classes())

    def same_class(self, e: int, f: int) -> bool:
        return self.class_of[e] == self.class_of[f]

    def equivalent_to(self, other: "EdgePartition") -> bool:
        """Equal as set partitions, ignoring class numbering."""
        if self.size != other.size:
            return False
        mine = {frozenset(c) for c in self.classes()}
        theirs = {frozenset(c) for c in other.classes()}
        return mine == theirs


@dataclass(frozen=True)
class Triviality:
    """Triviality of a partition with ``class_count`` classes."""
    kind: TrivialityKind
    class_count: int

    @property
    def is_one_trivial(self) -> bool:
        return self.kind is TrivialityKind.ONE_TRIVIAL

    @property
    def is_edge_trivial(self) -> bool:
        return self.kind is TrivialityKind.EDGE_TRIVIAL

    def __str__(self) -> str:
        if self.kind is TrivialityKind.NEITHER:
            return f"Neither({self.class_count})"
        return self.kind.value


@dataclass(frozen=True)
class Flag:
    """Boolean answer with optional evidence (a witness or a structure)."""
    value: bool
    evidence: Any = None

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self) -> Dict[str, Any]:
        evidence = self.evidence
        if isinstance(evidence, (set, frozenset)):
            evidence = sorted(evidence)
        elif isinstance(evidence, tuple):
            evidence = list(evidence)
        return {"value": self.value, "evidence": evidence}


@dataclass
class RecognitionReport:
    """Aggregate answers of the recognition predicates for one graph."""
    graph6: str
    n: int
    m: int
    connected: bool
    diameter: Optional[int]
    is_tree: Flag
    is_block_graph: Flag
    is_complete_multipartite: Flag
    part_sizes: Optional[PartSizes]
    is_paw_free: Flag
    is_k3_free: Flag
    diameter_le_2: Flag
    theta_class_count: int
    theta_bar_class_count: int
    theta_bar_star_triviality: Triviality
    theta_bar_star_1trivial: bool
    theta_closed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "connected": self.connected,
            "diameter": self.diameter,
            "is_tree": self.is_tree.to_dict(),
            "is_block_graph": self.is_block_graph.to_dict(),
            "is_complete_multipartite": self.is_complete_multipartite.to_dict(),
            "part_sizes": list(self.part_sizes.sizes) if self.part_sizes else None,
            "is_paw_free": self.is_paw_free.to_dict(),
            "is_k3_free": self.is_k3_free.to_dict(),
            "diameter_le_2": self.diameter_le_2.to_dict(),
            "theta_class_count": self.theta_class_count,
            "theta_bar_class_count": self.theta_bar_class_count,
            "theta_bar_star_triviality": str(self.theta_bar_star_triviality),
            "theta_bar_star_1trivial": self.theta_bar_star_1trivial,
            "theta_closed": self.theta_closed,
        }


@dataclass
class ClassReport:
    """Closure classes of Θ or Θ̄ on one graph."""
    graph6: str
    kind: RelationKind
    partition: EdgePartition
    edge_labels: List[str]
    triviality: Triviality
    method: str
    closed: Optional[bool] = None
    fast_path_agrees: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "graph6": self.graph6,
            "relation": self.kind.value,
            "method": self.method,
            "class_count": self.partition.count,
            "class_sizes": sorted(self.partition.class_sizes()),
            "classes": [
                [self.edge_labels[e] for e in members] for members in sorted(self.partition.classes())
            ],
            "triviality": str(self.triviality),
            "closed": self.closed,
            "fast_path_agrees": self.fast_path_agrees,
        }


@dataclass(frozen=True)
class RookFactorization:
    """Isomorphism of a vertex set onto the rook graph K_p □ K_q.

    ``coordinates`` maps each host vertex to its (row, column); rows range
    over ``0..p-1`` and columns over ``0..q-1``.
    """
    p: int
    q: int
    coordinates: Dict[int, Tuple[int, int]] = field(hash=False)

    def __post_init__(self) -> None:
        if len(self.coordinates) != self.p * self.q:
            raise GraphError(
                f"Rook factorization {self.p}x{self.q} needs {self.p * self.q} vertices"
            )

    @property
    def vertices(self) -> List[int]:
        return sorted(self.coordinates)

    @property
    def signature(self) -> Tuple[int, int]:
        """Factor sizes as an unordered pair, larger first."""
        return (max(self.p, self.q), min(self.p, self.q))


@dataclass(frozen=True)
class JoinOfRooks:
    """Split of a graph into two rook graphs joined completely."""
    left: RookFactorization
    right: RookFactorization

    @property
    def signature(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        first, second = sorted([self.left.signature, self.right.signature], reverse=True)
        return (first, second)


@dataclass
class RealizationResult:
    """Outcome of realizing a relation graph as the complement relation of a graph."""
    realizable: bool
    case: Optional[RealizationCase] = None
    part_sizes: Optional[PartSizes] = None
    graph: Optional[Graph] = None
    graph6: Optional[str] = None
    edge_map: Dict[int, int] = field(default_factory=dict)
    failure_stage: Optional[str] = None
    reason: Optional[str] = None
    candidates_tried: int = 0

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "realizable": self.realizable,
            "candidates_tried": self.candidates_tried,
        }
        if self.realizable and self.part_sizes is not None and self.graph is not None:
            result["case"] = self.case.value if self.case else None
            result["part_sizes"] = sorted(self.part_sizes.sizes)
            result["graph6"] = self.graph6
            result["edges"] = [list(e) for e in self.graph.edges]
            if self.graph.labels is not None:
                result["vertex_parts"] = [label[0] for label in self.graph.labels]
            result["edge_map"] = {
                str(w): list(self.graph.edges[e]) for w, e in sorted(self.edge_map.items())
            }
        else:
            result["failure_stage"] = self.failure_stage
            result["reason"] = self.reason
        return result


@dataclass
class CorpusSpec:
    """Which graphs the property suite examines."""
    n_max: int
    connected_only: bool = True
    source: CorpusSource = CorpusSource.BUILTIN
    path: Optional[str] = None
    n_min: int = 1

    def __post_init__(self) -> None:
        if self.n_min < 0 or self.n_max < self.n_min:
            raise ValueError(f"Invalid vertex range {self.n_min}..{self.n_max}")
        if self.source is CorpusSource.FILE and not self.path:
            raise ValueError("A file corpus needs a path")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "connected_only": self.connected_only,
            "source": self.source.value,
            "path": self.path,
        }


@dataclass(frozen=True)
class Counterexample:
    """A graph on which a claim failed."""
    graph6: str
    detail: str


@dataclass
class ClaimResult:
    """Verdict of one claim over a corpus."""
    claim_id: str
    description: str
    graphs_checked: int = 0
    failures: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim_id,
            "description": self.description,
            "passed": self.passed,
            "graphs_checked": self.graphs_checked,
            "failures": self.failures,
            "counterexamples": [
                {"graph6": c.graph6, "detail": c.detail} for c in self.counterexamples
            ],
        }


@dataclass
class PropertyReport:
    """Results of running a set of claims over a corpus."""
    corpus: CorpusSpec
    results: List[ClaimResult] = field(default_factory=list)
    graphs_examined: int = 0
    counts_by_order: Dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed_claims(self) -> List[str]:
        return [r.claim_id for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "corpus": self.corpus.to_dict(),
            "graphs_examined": self.graphs_examined,
            "counts_by_order": {str(k): v for k, v in sorted(self.counts_by_order.items())},
            "passed": self.passed,
            "claims": [r.to_dict() for r in self.results],
        }


# Type aliases for convenience
EdgeId = int
ClassCount = int
