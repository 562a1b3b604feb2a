"""
Table Exporter
==============

Flattens a PropertyReport into a pandas DataFrame with one row per claim,
for CSV export and ad hoc analysis.
"""

from typing import Any

import pandas as pd

from ..models import PropertyReport
from .base_formatter import BaseFormatter

COLUMNS = [
    "claim",
    "description",
    "passed",
    "graphs_checked",
    "failures",
    "first_counterexample",
    "first_detail",
]


class TableExporter(BaseFormatter):
    """CSV export of per-claim verdicts."""

    def to_dataframe(self, report: PropertyReport) -> pd.DataFrame:
        rows = []
        for result in report.results:
            first = result.counterexamples[0] if result.counterexamples else None
            rows.append({
                "claim": result.claim_id,
                "description": result.description,
                "passed": result.passed,
                "graphs_checked": result.graphs_checked,
                "failures": result.failures,
                "first_counterexample": first.graph6 if first else None,
                "first_detail": first.detail if first else None,
            })
        return pd.DataFrame(rows, columns=COLUMNS)

    def render(self, obj: Any) -> str:
        if not isinstance(obj, PropertyReport):
            raise self._unsupported(obj)
        return self.to_dataframe(obj).to_csv(index=False)
