"""
Suite Runner
============

Runs the registered claims over a graph corpus, optionally across worker
processes, and merges the verdicts into a PropertyReport. Graphs travel to
workers as graph6 strings and results are merged in corpus order, so the
report does not depend on the worker count.
"""

import logging
from collections import Counter
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Type

from tqdm import tqdm

from ..ingestion.graph6_parser import emit_graph6, parse_graph6
from ..models import ClaimResult, Counterexample, CorpusSpec, Graph, PropertyReport
from .claims import evaluate, get_claims
from .enumerator import enumerate_graphs

logger = logging.getLogger(__name__)

Outcome = Tuple[str, Optional[str], bool]
Job = Tuple[str, Tuple[str, ...]]


@dataclass
class SuiteConfig:
    """Configuration for property suite runs."""

    # Processing settings
    max_workers: int = 1
    chunk_size: int = 32

    # Reporting
    max_counterexamples: int = 5
    show_progress: bool = False
    fail_fast: bool = False


def _check_graph(job: Job) -> Tuple[str, int, List[Outcome]]:
    """Evaluate the named claims on one graph6 string."""
    graph6, claim_ids = job
    graph = parse_graph6(graph6)
    return graph6, graph.n, evaluate(get_claims(claim_ids), graph)


def _check_chunk(chunk: List[Job]) -> List[Tuple[str, int, List[Outcome]]]:
    """Worker entry point."""
    return [_check_graph(job) for job in chunk]


class SuiteRunner:
    """
    Checks claims graph by graph and aggregates the verdicts per claim.

    Parallel runs use ``executor_class``, a process pool by default.
    """

    executor_class: Type[Executor] = ProcessPoolExecutor

    def __init__(self, config: Optional[SuiteConfig] = None):
        self.config = config or SuiteConfig()
        logger.info(f"SuiteRunner initialized with {self.config.max_workers} workers")

    def run(
        self,
        corpus: CorpusSpec,
        claim_ids: Optional[Sequence[str]] = None,
        graphs: Optional[Iterable[Graph]] = None,
    ) -> PropertyReport:
        """
        Run claims over a corpus.

        Args:
            corpus: Corpus description, also recorded in the report
            claim_ids: Claims to run, all registered claims when omitted
            graphs: Explicit graphs to check instead of enumerating ``corpus``

        Returns:
            PropertyReport with one ClaimResult per claim in registry order

        Raises:
            UnknownClaimError: If a claim id is not registered
            CorpusError: If the corpus cannot be produced
        """
        claims = get_claims(claim_ids)
        ids = tuple(c.claim_id for c in claims)
        results: Dict[str, ClaimResult] = {
            c.claim_id: ClaimResult(c.claim_id, c.description) for c in claims
        }
        source = graphs if graphs is not None else enumerate_graphs(corpus)
        jobs = [(emit_graph6(g), ids) for g in source]
        logger.info(f"Checking {len(ids)} claims on {len(jobs)} graphs")

        counts: Counter = Counter()
        stream = self._execute(jobs)
        for graph6, order, outcomes in stream:
            counts[order] += 1
            failed_here = False
            for claim_id, detail, applied in outcomes:
                if not applied:
                    continue
                result = results[claim_id]
                result.graphs_checked += 1
                if detail is not None:
                    result.failures += 1
                    result.counterexamples.append(Counterexample(graph6, detail))
                    failed_here = True
            if failed_here and self.config.fail_fast:
                logger.info(f"Stopping at first failing graph {graph6}")
                break
        stream.close()

        for result in results.values():
            result.counterexamples.sort(key=lambda c: (len(c.graph6), c.graph6))
            del result.counterexamples[self.config.max_counterexamples:]
            if not result.passed:
                logger.error(f"Claim {result.claim_id} failed on {result.failures} graphs")

        report = PropertyReport(
            corpus=corpus,
            results=[results[i] for i in ids],
            graphs_examined=sum(counts.values()),
            counts_by_order=dict(sorted(counts.items())),
        )
        logger.info(
            f"Suite finished: {len(ids) - len(report.failed_claims)} passed, "
            f"{len(report.failed_claims)} failed"
        )
        return report

    def _execute(self, jobs: List[Job]) -> Iterator[Tuple[str, int, List[Outcome]]]:
        """
        Yield per-graph outcomes in job order.

        Parallel runs submit jobs in chunks; closing the generator early
        cancels every chunk that has not started.
        """
        progress = tqdm(total=len(jobs), desc="Checking graphs", unit="graph",
                        disable=not self.config.show_progress)
        with progress:
            if self.config.max_workers <= 1 or len(jobs) < 2:
                for job in jobs:
                    yield _check_graph(job)
                    progress.update(1)
                return

            size = max(1, self.config.chunk_size)
            executor = self.executor_class(max_workers=self.config.max_workers)
            try:
                futures = [
                    executor.submit(_check_chunk, jobs[start:start + size])
                    for start in range(0, len(jobs), size)
                ]
                for future in futures:
                    for outcome in future.result():
                        yield outcome
                        progress.update(1)
            finally:
                executor.shutdown(wait=True, cancel_futures=True)


def run_property_suite(
    corpus: CorpusSpec,
    claim_ids: Optional[Sequence[str]] = None,
    config: Optional[SuiteConfig] = None,
) -> PropertyReport:
    """Convenience wrapper around SuiteRunner.run."""
    return SuiteRunner(config).run(corpus, claim_ids)
