#!/usr/bin/env python3
"""
Unit tests for the claim registry.
"""

import sys
import unittest
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from theta_graphs.graph import complete, complete_multipartite, cycle, empty, path
from theta_graphs.graph.generators import diamond, gem, x_house
from theta_graphs.processing.claims import (
    CLAIMS, Claim, GraphFacts, UnknownClaimError, evaluate, get_claims,
)


class TestRegistry(unittest.TestCase):

    def test_claims_are_registered_in_order(self):
        ids = [c.claim_id for c in get_claims()]
        self.assertEqual(ids, list(CLAIMS))
        self.assertEqual(ids[0], "theta-delta-consecutive")
        self.assertIn("multipartite-classes", ids)
        self.assertIn("realization-round-trip", ids)
        self.assertEqual(len(ids), len(set(ids)))

    def test_subset_keeps_requested_order(self):
        chosen = get_claims(["cycle-classes", "delta-bounds"])
        self.assertEqual([c.claim_id for c in chosen], ["cycle-classes", "delta-bounds"])

    def test_unknown_claim(self):
        with self.assertRaises(UnknownClaimError):
            get_claims(["delta-bounds", "no-such-claim"])
        with self.assertRaises(KeyError):
            get_claims(["no-such-claim"])

    def test_applicability(self):
        connected = CLAIMS["multipartite-classes"]
        self.assertTrue(connected.connected_only)
        self.assertTrue(connected.needs_edges)
        self.assertFalse(connected.applies_to(GraphFacts(empty(3))))
        self.assertTrue(connected.applies_to(GraphFacts(path(3))))


class TestEvaluate(unittest.TestCase):

    def test_named_graphs_pass_every_claim(self):
        graphs = (
            complete(2), complete(3), complete(5), path(5), cycle(5), cycle(6),
            diamond(), gem(), x_house(), complete_multipartite([1, 2, 4]),
            complete_multipartite([1, 1, 2, 3]), empty(3),
        )
        for g in graphs:
            for claim_id, detail, _ in evaluate(get_claims(), g):
                with self.subTest(graph=str(g), claim=claim_id):
                    self.assertIsNone(detail)

    def test_skipped_claims_are_marked(self):
        outcomes = evaluate(get_claims(["cycle-classes", "delta-bounds"]), empty(2))
        self.assertEqual(outcomes, [("cycle-classes", None, False), ("delta-bounds", None, True)])

    def test_checker_exceptions_become_failures(self):
        def explode(facts):
            raise RuntimeError("boom")

        broken = Claim("broken", "always raises", explode)
        (outcome,) = evaluate([broken], path(3))
        self.assertEqual(outcome, ("broken", "RuntimeError: boom", True))

    def test_facts_are_cached(self):
        facts = GraphFacts(cycle(4))
        self.assertIs(facts.theta, facts.theta)
        self.assertEqual(facts.theta_classes.count, 2)
        self.assertEqual(facts.pair(0, 3), "(01, 23)")


if __name__ == '__main__':
    unittest.main()
