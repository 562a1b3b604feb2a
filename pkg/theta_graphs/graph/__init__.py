"""
Graph core: distances, generators, isomorphism, induced patterns and blocks.

Components:
- BFS all-pairs distances with infinite entries for unreachable pairs
- Constructors for the graph families the relations are studied on
- Backtracking isomorphism and a canonical form for small graphs
- Induced-subgraph search over named patterns
- Biconnected components and cut edges
"""

from .distances import (
    bfs_all_pairs, connected_components, diameter, is_connected,
    is_isometric_subgraph,
)
from .generators import (
    complete, path, cycle, star, empty, complete_multipartite,
    cartesian_product, join, disjoint_union, parse_graph_token,
)
from .isomorphism import find_isomorphism, is_isomorphic, canonical_form
from .induced import (
    PATTERNS, UnknownPatternError, contains_induced, find_clique, induced_copies,
)
from .blocks import biconnected_components, articulation_points, cut_edges
from .union_find import DisjointSet

__all__ = [
    # Distances
    "bfs_all_pairs",
    "connected_components",
    "diameter",
    "is_connected",
    "is_isometric_subgraph",

    # Generators
    "complete",
    "path",
    "cycle",
    "star",
    "empty",
    "complete_multipartite",
    "cartesian_product",
    "join",
    "disjoint_union",
    "parse_graph_token",

    # Isomorphism
    "find_isomorphism",
    "is_isomorphic",
    "canonical_form",

    # Induced subgraphs
    "PATTERNS",
    "UnknownPatternError",
    "contains_induced",
    "induced_copies",
    "find_clique",

    # Blocks
    "biconnected_components",
    "articulation_points",
    "cut_edges",

    "DisjointSet",
]
