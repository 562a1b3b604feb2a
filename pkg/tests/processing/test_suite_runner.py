#!/usr/bin/env python3
"""
Unit tests for SuiteRunner.
"""

import sys
import tempfile
import threading
import unittest
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from theta_graphs.analysis.relations import distinct_pairs, theta_related
from theta_graphs.graph import complete, cycle, path, star
from theta_graphs.ingestion import Graph6Parser
from theta_graphs.models import CorpusSource, CorpusSpec
from theta_graphs.processing.claims import CLAIMS, UnknownClaimError, claim
from theta_graphs.processing.suite_runner import SuiteConfig, SuiteRunner, run_property_suite
from tests.conftest import CONNECTED_COUNTS, EXHAUSTIVE_MAX_N


class GatedExecutor(ThreadPoolExecutor):
    """Thread pool that records started chunks and holds all but the first."""

    instances = []

    def __init__(self, max_workers):
        super().__init__(max_workers=max_workers)
        self.started = []
        self.submitted = 0
        self.gate = threading.Event()
        GatedExecutor.instances.append(self)

    def submit(self, fn, chunk):
        held = self.submitted > 0
        self.submitted += 1

        def run():
            self.started.append(chunk)
            if held:
                self.gate.wait(0.5)
            return fn(chunk)

        return super().submit(run)


class GatedRunner(SuiteRunner):
    executor_class = GatedExecutor


class TestSuiteRunner(unittest.TestCase):
    """Whole-suite runs and their aggregation."""

    def test_every_claim_holds_on_connected_graphs(self):
        spec = CorpusSpec(n_max=EXHAUSTIVE_MAX_N)
        report = run_property_suite(spec)
        self.assertTrue(report.passed, report.failed_claims)
        self.assertEqual(
            report.graphs_examined,
            sum(CONNECTED_COUNTS[n] for n in range(1, EXHAUSTIVE_MAX_N + 1)),
        )
        self.assertEqual(report.counts_by_order[6], 112)

    def test_every_claim_holds_on_small_disconnected_graphs(self):
        report = run_property_suite(CorpusSpec(n_max=5, connected_only=False))
        self.assertTrue(report.passed, report.failed_claims)
        self.assertEqual(report.graphs_examined, 1 + 2 + 4 + 11 + 34)

    def test_worker_count_does_not_change_report(self):
        spec = CorpusSpec(n_max=5)
        ids = ["delta-bounds", "multipartite-classes", "cycle-classes"]
        serial = run_property_suite(spec, ids)
        parallel = run_property_suite(spec, ids, SuiteConfig(max_workers=2, chunk_size=4))
        self.assertEqual(serial.to_dict(), parallel.to_dict())

    def test_unknown_claim(self):
        with self.assertRaises(UnknownClaimError):
            run_property_suite(CorpusSpec(n_max=3), ["no-such-claim"])


class TestNegativeControl(unittest.TestCase):
    """A deliberately false claim must be reported with counterexamples."""

    def setUp(self):
        @claim("theta-never-holds", "no two distinct edges are Θ-related")
        def check_theta_never_holds(facts):
            g = facts.graph
            for e, f in distinct_pairs(g):
                if theta_related(g, facts.d, e, f):
                    return f"{facts.pair(e, f)} are Θ-related"
            return None

    def tearDown(self):
        CLAIMS.pop("theta-never-holds", None)

    def test_false_claim_fails(self):
        config = SuiteConfig(max_counterexamples=3)
        report = SuiteRunner(config).run(CorpusSpec(n_max=5), ["theta-never-holds"])
        self.assertFalse(report.passed)
        self.assertEqual(report.failed_claims, ["theta-never-holds"])
        (result,) = report.results
        self.assertEqual(len(result.counterexamples), 3)
        # K3 has the shortest graph6 among failing graphs
        self.assertEqual(result.counterexamples[0].graph6, "Bw")

    def test_fail_fast(self):
        config = SuiteConfig(fail_fast=True)
        report = SuiteRunner(config).run(CorpusSpec(n_max=5), ["theta-never-holds"])
        self.assertEqual(report.results[0].failures, 1)
        self.assertLess(report.graphs_examined, 29)

    def test_fail_fast_cancels_pending_work(self):
        GatedExecutor.instances.clear()
        graphs = [complete(3)] + [path(n) for n in range(2, 12)] * 2
        config = SuiteConfig(max_workers=2, chunk_size=1, fail_fast=True)
        report = GatedRunner(config).run(
            CorpusSpec(n_max=11), ["theta-never-holds"], graphs=graphs
        )
        self.assertEqual(report.graphs_examined, 1)
        self.assertEqual(report.results[0].failures, 1)
        (executor,) = GatedExecutor.instances
        self.assertEqual(executor.submitted, len(graphs))
        self.assertLessEqual(len(executor.started), 1 + config.max_workers)

    def test_trees_only_corpus_passes(self):
        trees = [path(2), path(3), path(4), star(3), path(5), star(4)]
        with tempfile.TemporaryDirectory() as tmp:
            corpus = str(Path(tmp) / "trees.g6")
            Graph6Parser().write_file(trees, corpus, header=True)
            spec = CorpusSpec(n_max=5, source=CorpusSource.FILE, path=corpus)
            report = run_property_suite(spec, ["theta-never-holds", "tree-via-nonadjacent"])
        self.assertTrue(report.passed)
        self.assertEqual(report.graphs_examined, 6)
        self.assertEqual(report.counts_by_order, {2: 1, 3: 1, 4: 2, 5: 2})

    def test_explicit_graphs(self):
        runner = SuiteRunner()
        report = runner.run(
            CorpusSpec(n_max=6), ["theta-never-holds"], graphs=[path(4), cycle(6), complete(2)]
        )
        (result,) = report.results
        self.assertEqual(result.graphs_checked, 3)
        self.assertEqual(result.failures, 1)
        self.assertEqual(report.counts_by_order, {2: 1, 4: 1, 6: 1})


if __name__ == '__main__':
    unittest.main()
