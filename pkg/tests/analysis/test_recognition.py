#!/usr/bin/env python3
"""
Unit tests for graph-class recognition through Θ and Θ̄.
"""

import random
import sys
import unittest
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from theta_graphs.analysis.recognition import (
    CharacterizationError, all_nonadjacent_theta, block_graph_via_theta_bar, classify,
    delta_characterization, diameter_le_2_via_delta, find_isometric_long_cycle_or_diamond,
    four_point_condition, is_block_graph, is_complete_multipartite, is_tree,
    multipartite_parts, theta_bar_classes_distance_free, theta_bar_star_is_1trivial,
    tree_via_nonadjacent_delta,
)
from theta_graphs.analysis.relations import closure_classes, theta_bar
from theta_graphs.graph import (
    complete, complete_multipartite, cycle, disjoint_union, empty, path, star,
)
from theta_graphs.graph.generators import diamond, friendship, paw
from theta_graphs.models import TrivialityKind
from theta_graphs.processing.enumerator import graphs_on
from tests.conftest import EXHAUSTIVE_MAX_N, WORKED_EXAMPLES


class TestStructuralRecognizers(unittest.TestCase):

    def test_is_tree(self):
        self.assertTrue(is_tree(path(5)))
        self.assertTrue(is_tree(star(4)))
        negative = is_tree(cycle(4))
        self.assertFalse(negative)
        self.assertEqual(negative.evidence, {"excess_edges": 1})
        forest = is_tree(disjoint_union(complete(2), complete(2)))
        self.assertEqual(forest.evidence, {"components": 2})

    def test_is_block_graph(self):
        self.assertTrue(is_block_graph(friendship(2)))
        self.assertTrue(is_block_graph(complete(5)))
        self.assertTrue(is_block_graph(path(4)))
        self.assertFalse(is_block_graph(cycle(4)))
        self.assertFalse(is_block_graph(diamond()))

    def test_block_graph_oracles_agree(self):
        for n in range(1, 7):
            for g in graphs_on(n):
                with self.subTest(graph=str(g)):
                    expected = bool(is_block_graph(g))
                    self.assertEqual(bool(four_point_condition(g)), expected)
                    self.assertEqual(
                        find_isometric_long_cycle_or_diamond(g) is None, expected
                    )

    def test_isometric_witnesses(self):
        self.assertEqual(find_isometric_long_cycle_or_diamond(cycle(5)), (0, 1, 2, 3, 4))
        self.assertEqual(find_isometric_long_cycle_or_diamond(diamond()), (0, 1, 2, 3))
        self.assertIsNone(find_isometric_long_cycle_or_diamond(path(6)))


class TestDeltaRecognizers(unittest.TestCase):
    """Δ-based recognizers and the structural answers they are checked against."""

    def test_block_graph_via_theta_bar(self):
        self.assertTrue(block_graph_via_theta_bar(friendship(3)))
        negative = block_graph_via_theta_bar(diamond())
        self.assertFalse(negative)
        self.assertIsNotNone(negative.evidence)

    def test_diameter_via_delta(self):
        self.assertTrue(diameter_le_2_via_delta(cycle(5)))
        negative = diameter_le_2_via_delta(cycle(6))
        self.assertFalse(negative)
        self.assertEqual(len(negative.evidence["delta"]), 3)
        # No non-adjacent pair: answered from the diameter itself
        self.assertTrue(diameter_le_2_via_delta(path(3)))
        self.assertFalse(diameter_le_2_via_delta(disjoint_union(path(2), path(2))))

    def test_disconnected_answers_per_component(self):
        g = disjoint_union(complete(3), cycle(6))
        answer = diameter_le_2_via_delta(g)
        self.assertFalse(answer)
        triangle, hexagon = answer.evidence["components"]
        self.assertEqual(triangle, {"vertices": [0, 1, 2], "value": True, "evidence": None})
        self.assertEqual(hexagon["vertices"], [3, 4, 5, 6, 7, 8])
        self.assertFalse(hexagon["value"])
        self.assertEqual(len(hexagon["evidence"]["delta"]), 3)
        for u, v in hexagon["evidence"]["pair"]:
            self.assertTrue(g.has_edge(u, v))
            self.assertIn(u, hexagon["vertices"])

        forest = tree_via_nonadjacent_delta(disjoint_union(path(3), path(2)))
        self.assertFalse(forest)
        self.assertEqual(
            [(c["vertices"], c["value"]) for c in forest.evidence["components"]],
            [([0, 1, 2], True), ([3, 4], True)],
        )

    def test_all_nonadjacent_theta(self):
        self.assertTrue(all_nonadjacent_theta(cycle(4)))
        self.assertTrue(all_nonadjacent_theta(cycle(5)))
        self.assertTrue(all_nonadjacent_theta(complete_multipartite([2, 2, 2])))
        self.assertFalse(all_nonadjacent_theta(complete(4)))
        self.assertFalse(all_nonadjacent_theta(path(4)))

    def test_tree_via_nonadjacent_delta(self):
        self.assertTrue(tree_via_nonadjacent_delta(path(5)))
        self.assertTrue(tree_via_nonadjacent_delta(star(3)))
        self.assertFalse(tree_via_nonadjacent_delta(cycle(5)))
        self.assertFalse(tree_via_nonadjacent_delta(paw()))

    def test_recognizers_never_disagree(self):
        for n in range(1, 7):
            for g in graphs_on(n):
                with self.subTest(graph=str(g)):
                    try:
                        block_graph_via_theta_bar(g)
                        diameter_le_2_via_delta(g)
                        all_nonadjacent_theta(g)
                        tree_via_nonadjacent_delta(g)
                    except CharacterizationError as e:
                        self.fail(str(e))

    def test_delta_characterization(self):
        for g in (complete(2), complete(3), path(4), cycle(5), diamond(), star(4)):
            with self.subTest(graph=str(g)):
                self.assertTrue(delta_characterization(g).consistent)
        triangle = delta_characterization(complete(3))
        self.assertEqual(triangle.to_dict()["k2_or_k3"], [True, True, True])
        tree = delta_characterization(path(4))
        self.assertEqual(tree.to_dict()["tree"], [True, True, True, True])


class TestMultipartite(unittest.TestCase):

    def test_parts(self):
        self.assertEqual(
            multipartite_parts(complete_multipartite([1, 2, 4])),
            [[0], [1, 2], [3, 4, 5, 6]],
        )
        self.assertEqual(is_complete_multipartite(path(3)).sizes, (2, 1))
        self.assertEqual(is_complete_multipartite(complete(4)).ell, 4)
        self.assertIsNone(is_complete_multipartite(cycle(5)))
        self.assertIsNone(multipartite_parts(empty(0)))

    def test_theta_bar_star_is_1trivial(self):
        positive = (path(5), cycle(4), complete(5), cycle(6), paw(), star(3))
        negative = (complete(3), complete(4), diamond(), empty(3),
                    complete_multipartite([1, 2, 4]), complete_multipartite([2, 2, 2, 2]))
        for g in positive:
            with self.subTest(graph=str(g)):
                self.assertTrue(theta_bar_star_is_1trivial(g))
        for g in negative:
            with self.subTest(graph=str(g)):
                self.assertFalse(theta_bar_star_is_1trivial(g))

    def test_1trivial_matches_closure(self):
        for n in range(1, EXHAUSTIVE_MAX_N + 1):
            for g in graphs_on(n):
                if g.m == 0:
                    continue
                with self.subTest(graph=str(g)):
                    count = closure_classes(theta_bar(g)).count
                    self.assertEqual(theta_bar_star_is_1trivial(g), count == 1)

    def test_distance_free_worked_examples(self):
        for sizes, expected in WORKED_EXAMPLES.items():
            with self.subTest(sizes=sizes):
                g = complete_multipartite(list(sizes))
                self.assertEqual(g.m, expected["edges"])
                partition = theta_bar_classes_distance_free(g)
                self.assertEqual(sorted(partition.class_sizes()), expected["class_sizes"])
                self.assertTrue(partition.equivalent_to(closure_classes(theta_bar(g))))

    def test_distance_free_on_random_multipartite(self):
        rng = random.Random(7)
        for _ in range(40):
            ell = rng.choice([2, 3, 4])
            sizes = [rng.randint(1, 3) for _ in range(ell)]
            g = complete_multipartite(sizes)
            with self.subTest(sizes=sizes):
                self.assertTrue(
                    theta_bar_classes_distance_free(g).equivalent_to(
                        closure_classes(theta_bar(g))
                    )
                )


class TestClassify(unittest.TestCase):

    def test_path(self):
        report = classify(path(4))
        self.assertTrue(report.is_tree)
        self.assertEqual(report.diameter, 3)
        self.assertTrue(report.theta_bar_star_1trivial)
        self.assertEqual(report.theta_class_count, 3)
        self.assertEqual(report.to_dict()["schema"], 1)

    def test_triangle(self):
        report = classify(complete(3))
        self.assertEqual(report.part_sizes.sizes, (1, 1, 1))
        self.assertEqual(report.theta_bar_class_count, 3)
        self.assertEqual(report.theta_bar_star_triviality.kind, TrivialityKind.EDGE_TRIVIAL)
        self.assertTrue(report.theta_closed)

    def test_disconnected(self):
        report = classify(disjoint_union(complete(2), complete(2)))
        self.assertFalse(report.connected)
        self.assertIsNone(report.diameter)


if __name__ == '__main__':
    unittest.main()
