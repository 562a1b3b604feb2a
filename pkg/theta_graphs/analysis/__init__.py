"""
Analysis Module
===============

Θ and Θ̄ relations on edges, recognition through distance sets, and
realizability of Θ̄ relation graphs.
"""

from .relations import (
    RELATION_METHODS, DeltaProfile, EdgeIndexError, RelationError,
    closure_classes, closures_coincide, delta_profile, delta_set, is_closed,
    relation_graph, theta, theta_bar, theta_bar_related, theta_related, triviality,
)
from .recognition import (
    CharacterizationError, DeltaCharacterization, GraphRecognizer,
    all_nonadjacent_theta, block_graph_via_theta_bar, classify,
    delta_characterization, diameter_le_2_via_delta,
    find_isometric_long_cycle_or_diamond, four_point_condition, is_block_graph,
    is_complete_multipartite, is_tree, multipartite_parts,
    theta_bar_classes_distance_free, theta_bar_star_is_1trivial,
    tree_via_nonadjacent_delta,
)
from .realizability import (
    factor_as_join_of_rooks, factor_as_rook, join_of_rooks_candidates,
    perturbations, realize_theta_bar,
)

__all__ = [
    # Relations
    "RELATION_METHODS",
    "DeltaProfile",
    "EdgeIndexError",
    "RelationError",
    "closure_classes",
    "closures_coincide",
    "delta_profile",
    "delta_set",
    "is_closed",
    "relation_graph",
    "theta",
    "theta_bar",
    "theta_bar_related",
    "theta_related",
    "triviality",

    # Recognition
    "CharacterizationError",
    "DeltaCharacterization",
    "GraphRecognizer",
    "all_nonadjacent_theta",
    "block_graph_via_theta_bar",
    "classify",
    "delta_characterization",
    "diameter_le_2_via_delta",
    "find_isometric_long_cycle_or_diamond",
    "four_point_condition",
    "is_block_graph",
    "is_complete_multipartite",
    "is_tree",
    "multipartite_parts",
    "theta_bar_classes_distance_free",
    "theta_bar_star_is_1trivial",
    "tree_via_nonadjacent_delta",

    # Realizability
    "factor_as_join_of_rooks",
    "factor_as_rook",
    "join_of_rooks_candidates",
    "perturbations",
    "realize_theta_bar",
]
