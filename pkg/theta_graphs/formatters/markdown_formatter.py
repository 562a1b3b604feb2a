"""
Markdown Formatter
==================

Human-readable summary of a property suite run.
"""

from typing import Any

from ..models import PropertyReport
from .base_formatter import BaseFormatter


class MarkdownFormatter(BaseFormatter):
    """
    Formatter for PropertyReport summaries.

    The summary lists the corpus, the graph counts per order and one table
    row per claim, followed by the retained counterexamples of failed claims.
    """

    def render(self, obj: Any) -> str:
        if not isinstance(obj, PropertyReport):
            raise self._unsupported(obj)
        return self._generate_report_markdown(obj)

    def _generate_report_markdown(self, report: PropertyReport) -> str:
        corpus = report.corpus
        verdict = "PASS" if report.passed else "FAIL"
        scope = "connected graphs" if corpus.connected_only else "all graphs"
        source = corpus.path if corpus.path else "built-in enumerator"

        lines = []
        lines.append(f"# Property suite: {verdict}")
        lines.append("")
        lines.append("## Corpus")
        lines.append("")
        lines.append(f"- **Source**: {source}")
        lines.append(f"- **Scope**: {scope}, {corpus.n_min} to {corpus.n_max} vertices")
        lines.append(f"- **Graphs examined**: {report.graphs_examined}")
        for order, count in sorted(report.counts_by_order.items()):
            lines.append(f"  - n = {order}: {count}")
        lines.append("")

        lines.append("## Claims")
        lines.append("")
        lines.append("| Claim | Result | Graphs checked | Failures |")
        lines.append("|-------|--------|----------------|----------|")
        for result in report.results:
            status = "pass" if result.passed else "FAIL"
            lines.append(
                f"| `{result.claim_id}` | {status} | {result.graphs_checked} | {result.failures} |"
            )
        lines.append("")

        failed = [r for r in report.results if not r.passed]
        if failed:
            lines.append("## Counterexamples")
            lines.append("")
            for result in failed:
                lines.append(f"### {result.claim_id}")
                lines.append("")
                lines.append(result.description)
                lines.append("")
                for example in result.counterexamples:
                    lines.append(f"- `{example.graph6}`: {example.detail}")
                lines.append("")

        return "\n".join(lines)
