#!/usr/bin/env python3
"""
Unit tests for Θ, Θ̄, distance sets and closures.
"""

import math
import sys
import unittest
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from theta_graphs.analysis.relations import (
    EdgeIndexError, RelationError, closure_classes, closures_coincide, delta_profile,
    delta_set, is_closed, relation_graph, theta, theta_bar, theta_bar_related,
    theta_related, triviality,
)
from theta_graphs.graph import (
    bfs_all_pairs, complete, complete_multipartite, cycle, disjoint_union, empty,
    is_connected, path,
)
from theta_graphs.graph.generators import diamond
from theta_graphs.models import RelationKind, TrivialityKind
from theta_graphs.processing.enumerator import graphs_on


class TestDistanceSets(unittest.TestCase):
    """Δ for single edge pairs."""

    def test_opposite_edges_of_square(self):
        g = cycle(4)
        d = bfs_all_pairs(g)
        e, f = g.edge_id(0, 1), g.edge_id(2, 3)
        self.assertEqual(delta_set(g, d, e, f).sorted(), [1, 2])
        self.assertTrue(theta_related(g, d, e, f))
        self.assertFalse(theta_bar_related(g, d, e, f))

    def test_path_ends(self):
        g = path(4)
        d = bfs_all_pairs(g)
        e, f = g.edge_id(0, 1), g.edge_id(2, 3)
        self.assertEqual(delta_set(g, d, e, f).to_list(), [1, 2, 3])
        self.assertFalse(theta_related(g, d, e, f))

    def test_edge_with_itself(self):
        g = path(3)
        d = bfs_all_pairs(g)
        self.assertEqual(delta_set(g, d, 0, 0).sorted(), [0, 1])
        self.assertTrue(theta_related(g, d, 0, 0))
        self.assertTrue(theta_bar_related(g, d, 0, 0))

    def test_edges_in_different_components(self):
        g = disjoint_union(complete(2), complete(2))
        d = bfs_all_pairs(g)
        delta = delta_set(g, d, 0, 1)
        self.assertEqual(len(delta), 1)
        self.assertTrue(math.isinf(delta.minimum))
        self.assertEqual(delta.to_list(), ["inf"])
        self.assertTrue(theta_bar_related(g, d, 0, 1))

    def test_edge_index_out_of_range(self):
        g = path(3)
        d = bfs_all_pairs(g)
        with self.assertRaises(EdgeIndexError):
            delta_set(g, d, 0, 5)
        with self.assertRaises(IndexError):
            theta_related(g, d, -1, 0)


class TestRelationGraphs(unittest.TestCase):
    """Relation graphs and their closures."""

    def test_even_cycle_classes(self):
        for n in range(2, 7):
            with self.subTest(n=n):
                r = theta(cycle(2 * n))
                self.assertEqual(closure_classes(r).count, n)
                self.assertEqual(closure_classes(r).class_sizes(), [2] * n)
                self.assertTrue(is_closed(r))

    def test_odd_cycle_classes(self):
        for n in range(2, 6):
            with self.subTest(n=n):
                r = theta(cycle(2 * n + 1))
                self.assertEqual(closure_classes(r).count, 1)
                self.assertFalse(is_closed(r))

    def test_triangle(self):
        r = theta(complete(3))
        self.assertEqual(r.pair_count, 3)
        self.assertTrue(is_closed(r))
        bar = theta_bar(complete(3))
        partition = closure_classes(bar)
        self.assertEqual(partition.count, 3)
        self.assertEqual(str(triviality(bar, partition)), "EdgeTrivial")

    def test_k4_complement_relation(self):
        bar = theta_bar(complete(4))
        partition = closure_classes(bar)
        self.assertEqual(str(triviality(bar, partition)), "Neither(3)")
        self.assertTrue(is_closed(bar))

    def test_diamond_has_three_complement_components(self):
        self.assertEqual(closure_classes(theta_bar(diamond())).count, 3)

    def test_connected_relation_graphs(self):
        self.assertTrue(is_connected(theta(complete_multipartite([2, 3])).as_graph()))
        self.assertTrue(is_connected(theta_bar(complete(5)).as_graph()))

    def test_single_edge(self):
        r = theta(complete(2))
        result = triviality(r, closure_classes(r))
        self.assertEqual(result.kind, TrivialityKind.ONE_TRIVIAL)
        self.assertEqual(result.class_count, 1)

    def test_edgeless_graph(self):
        r = theta_bar(empty(3))
        partition = closure_classes(r)
        self.assertEqual(partition.count, 0)
        self.assertEqual(triviality(r, partition).kind, TrivialityKind.EDGE_TRIVIAL)

    def test_vectorized_matches_pairwise(self):
        for g in graphs_on(5):
            for which in (RelationKind.THETA, RelationKind.THETA_BAR):
                fast = relation_graph(g, which, method="vectorized")
                slow = relation_graph(g, which, method="pairwise")
                self.assertEqual(fast.adjacency, slow.adjacency)

    def test_rejects_custom_kind_and_unknown_method(self):
        with self.assertRaises(RelationError):
            relation_graph(path(3), RelationKind.CUSTOM)
        with self.assertRaises(RelationError):
            relation_graph(path(3), RelationKind.THETA, method="sparse")


class TestProfilesAndCoincidence(unittest.TestCase):

    def test_tree_profile(self):
        profile = delta_profile(path(5))
        self.assertEqual(profile.sizes(), {3})
        self.assertEqual(profile.sizes(nonadjacent_only=True), {3})

    def test_square_profile(self):
        profile = delta_profile(cycle(4))
        self.assertEqual(profile.sizes(nonadjacent_only=True), {2})
        self.assertEqual(profile.nonadjacent[2], 2)

    def test_closures_coincide(self):
        self.assertTrue(closures_coincide(complete(2)))
        self.assertFalse(closures_coincide(cycle(6)))
        self.assertFalse(closures_coincide(complete(3)))


if __name__ == '__main__':
    unittest.main()
