"""
Main processing facade for Θ / Θ̄ computations.

This module ties graph input, the relation computations, recognition,
realizability and the property suite together behind one configurable
object, used by the command-line interface and by library callers.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from .analysis.realizability import realize_theta_bar
from .analysis.recognition import (
    CharacterizationError, GraphRecognizer, theta_bar_classes_distance_free,
)
from .analysis.relations import (
    RelationError, closure_classes, is_closed, partition_triviality, relation_graph,
    triviality,
)
from .graph.generators import cartesian_product, complete_multipartite, join, parse_graph_token
from .ingestion.graph6_parser import Graph6ParseError, emit_graph6, parse_graph6
from .ingestion.relation_parser import RelationParseError, RelationParser
from .models import (
    ClassReport, CorpusSpec, EdgeRelation, Graph, GraphError, PropertyReport,
    RealizationResult, RecognitionReport, RelationKind, SCHEMA_VERSION,
)
from .processing.claims import UnknownClaimError
from .processing.enumerator import CorpusError
from .processing.suite_runner import SuiteConfig, SuiteRunner

logger = logging.getLogger(__name__)


class ProcessingError(Exception):
    """Raised when processing fails."""
    pass


class FastPathMismatchError(ProcessingError):
    """The distance-free Θ̄ classes disagree with the distance-based ones."""

    def __init__(self, report: ClassReport):
        super().__init__(f"Distance-free classes disagree with the closure on {report.graph6}")
        self.report = report


RELATION_NAMES = {
    "theta": RelationKind.THETA,
    "thetabar": RelationKind.THETA_BAR,
}


class ThetaGraphProcessor:
    """Main entry point for relation, recognition, realization and verification."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize processor with configuration.

        Args:
            config: Overrides for the default configuration dictionary
        """
        self.config = self._get_default_config()
        if config:
            self.config.update(config)
        self.recognizer = GraphRecognizer(self.config["relation_method"])
        self.relation_parser = RelationParser()
        logger.info("ThetaGraphProcessor initialized")

    def load_graph(self, text: str) -> Graph:
        """
        Parse one graph6 string.

        Raises:
            ProcessingError: If the string is not valid graph6
        """
        try:
            return parse_graph6(text.strip())
        except Graph6ParseError as e:
            raise ProcessingError(f"Invalid graph6 input {text.strip()!r}: {e}") from e

    def load_relation(self, text: str) -> EdgeRelation:
        """
        Parse a relation graph given as graph6 or as a JSON pair list.

        Raises:
            ProcessingError: If the text is neither
        """
        try:
            return self.relation_parser.parse(text)
        except RelationParseError as e:
            raise ProcessingError(f"Invalid relation graph: {e}") from e

    def relation(self, g: Graph, which: RelationKind) -> EdgeRelation:
        try:
            return relation_graph(g, which, method=self.config["relation_method"])
        except RelationError as e:
            raise ProcessingError(str(e)) from e

    def describe_relation(self, g: Graph, r: EdgeRelation) -> Dict[str, Any]:
        """JSON-ready description of a relation graph over the edges of ``g``."""
        return {
            "schema": SCHEMA_VERSION,
            "graph6": emit_graph6(g),
            "relation": r.kind.value,
            "edges": [g.edge_label(e) for e in range(g.m)],
            "pairs": [[e, f] for e, f in r.pairs()],
            "relation_graph6": emit_graph6(r.as_graph()),
        }

    def classes(
        self,
        g: Graph,
        which: RelationKind,
        fast: bool = False,
        verify: Optional[bool] = None,
    ) -> ClassReport:
        """
        Closure classes of Θ or Θ̄.

        Args:
            g: Host graph
            which: Relation whose closure is wanted
            fast: Use the distance-free Θ̄ classes
            verify: Cross-check the fast path against the closure; defaults to
                the ``verify_fast_path`` setting

        Raises:
            ProcessingError: If the fast path is requested for Θ
            FastPathMismatchError: If the cross-check fails
        """
        labels = [g.edge_label(e) for e in range(g.m)]
        graph6 = emit_graph6(g)

        if not fast:
            r = self.relation(g, which)
            partition = closure_classes(r)
            return ClassReport(
                graph6, which, partition, labels, triviality(r, partition),
                method="closure", closed=is_closed(r),
            )

        if which is not RelationKind.THETA_BAR:
            raise ProcessingError("The distance-free path only computes Θ̄ classes")
        partition = theta_bar_classes_distance_free(g)
        report = ClassReport(
            graph6, which, partition, labels, partition_triviality(partition),
            method="distance-free",
        )
        if verify is None:
            verify = self.config["verify_fast_path"]
        if verify:
            r = self.relation(g, which)
            report.closed = is_closed(r)
            report.fast_path_agrees = partition.equivalent_to(closure_classes(r))
            if not report.fast_path_agrees:
                logger.error(f"Fast path disagrees with the closure on {graph6}")
                raise FastPathMismatchError(report)
        return report

    def classify(self, g: Graph) -> RecognitionReport:
        try:
            return self.recognizer.classify(g)
        except CharacterizationError as e:
            raise ProcessingError(f"Recognition failed on {emit_graph6(g)}: {e}") from e

    def realize(self, r: EdgeRelation) -> RealizationResult:
        result = realize_theta_bar(r)
        if result.realizable:
            logger.info(f"Realized relation graph as {result.part_sizes}")
        else:
            logger.info(f"Not realizable ({result.failure_stage}): {result.reason}")
        return result

    def verify(
        self,
        corpus: CorpusSpec,
        claim_ids: Optional[Sequence[str]] = None,
        fail_fast: bool = False,
    ) -> PropertyReport:
        """
        Run the property suite over a corpus.

        Raises:
            ProcessingError: If the corpus cannot be produced or a claim id is unknown
        """
        suite_config = SuiteConfig(
            max_workers=self.config["max_workers"],
            max_counterexamples=self.config["max_counterexamples"],
            show_progress=self.config["show_progress"],
            fail_fast=fail_fast,
        )
        try:
            return SuiteRunner(suite_config).run(corpus, claim_ids)
        except CorpusError as e:
            raise ProcessingError(str(e)) from e
        except UnknownClaimError as e:
            raise ProcessingError(f"Unknown claim: {e.args[0]}") from e

    def generate_multipartite(self, sizes: List[int]) -> Graph:
        try:
            return complete_multipartite(sizes)
        except GraphError as e:
            raise ProcessingError(str(e)) from e

    def generate_product(self, left: str, right: str) -> Graph:
        return cartesian_product(self.generate_named(left), self.generate_named(right))

    def generate_join(self, left: str, right: str) -> Graph:
        return join(self.generate_named(left), self.generate_named(right))

    def generate_named(self, token: str) -> Graph:
        try:
            return parse_graph_token(token)
        except GraphError as e:
            raise ProcessingError(str(e)) from e

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default processing configuration."""
        return {
            "max_workers": 1,
            "max_counterexamples": 5,
            "show_progress": False,
            "verify_fast_path": True,
            "connected_only": True,
            "relation_method": "vectorized",
        }
