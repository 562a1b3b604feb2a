#!/usr/bin/env python3
"""
Unit tests for the DOT, JSON, Markdown and CSV formatters.
"""

import io
import json
import math
import sys
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pandas as pd

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from theta_graphs.analysis.relations import theta
from theta_graphs.formatters import (
    DotFormatter, FormatterConfig, FormatterError, JsonFormatter, MarkdownFormatter,
    TableExporter, emit_dot, formatter_registry, to_jsonable,
)
from theta_graphs.graph import cycle, path
from theta_graphs.models import (
    ClaimResult, CorpusSpec, Counterexample, PropertyReport,
)


def sample_report() -> PropertyReport:
    passing = ClaimResult("delta-bounds", "Δ has one to three values", graphs_checked=8)
    failing = ClaimResult(
        "made-up", "a false statement", graphs_checked=8, failures=2,
        counterexamples=[Counterexample("Bw", "K3 breaks it"), Counterexample("Cr", "so does C4")],
    )
    return PropertyReport(
        corpus=CorpusSpec(n_max=4),
        results=[passing, failing],
        graphs_examined=8,
        counts_by_order={1: 1, 2: 1, 3: 2, 4: 6},
    )


class TestDotFormatter(unittest.TestCase):

    def test_emit_dot(self):
        text = emit_dot(path(3), "P3")
        self.assertEqual(text, 'graph "P3" {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n')

    def test_relation_labels(self):
        g = cycle(4)
        text = DotFormatter(host=g).render(theta(g))
        self.assertTrue(text.startswith('graph "G_theta" {'))
        self.assertIn('[label="01"]', text)
        self.assertIn('[label="23"]', text)
        self.assertEqual(text.count(" -- "), 2)

    def test_unsupported(self):
        with self.assertRaises(FormatterError):
            DotFormatter().render(42)


class TestJsonFormatter(unittest.TestCase):

    def test_to_jsonable(self):
        self.assertEqual(to_jsonable({3, 1, 2}), [1, 2, 3])
        self.assertEqual(to_jsonable(math.inf), "inf")
        self.assertEqual(to_jsonable(np.int64(4)), 4)
        with self.assertRaises(TypeError):
            to_jsonable(object())

    def test_report_is_deterministic(self):
        formatter = JsonFormatter()
        first = formatter.render(sample_report())
        self.assertEqual(first, formatter.render(sample_report()))
        payload = json.loads(first)
        self.assertEqual(payload["schema"], 1)
        self.assertFalse(payload["passed"])
        self.assertEqual(payload["counts_by_order"], {"1": 1, "2": 1, "3": 2, "4": 6})

    def test_write_respects_overwrite(self):
        with tempfile.TemporaryDirectory() as tmp:
            config = FormatterConfig(output_directory=tmp, overwrite_existing=False)
            formatter = JsonFormatter(config)
            written = formatter.write({"a": 1}, "nested/out.json")
            self.assertEqual(written, Path(tmp) / "nested" / "out.json")
            self.assertEqual(json.loads(written.read_text()), {"a": 1})
            with self.assertRaises(FormatterError):
                formatter.write({"a": 2}, "nested/out.json")


class TestReportFormatters(unittest.TestCase):

    def test_markdown(self):
        text = MarkdownFormatter().render(sample_report())
        self.assertTrue(text.startswith("# Property suite: FAIL"))
        self.assertIn("| `delta-bounds` | pass | 8 | 0 |", text)
        self.assertIn("### made-up", text)
        self.assertIn("- `Bw`: K3 breaks it", text)

    def test_markdown_rejects_other_objects(self):
        with self.assertRaises(FormatterError):
            MarkdownFormatter().render({"not": "a report"})

    def test_table(self):
        exporter = TableExporter()
        frame = exporter.to_dataframe(sample_report())
        self.assertEqual(list(frame["claim"]), ["delta-bounds", "made-up"])
        self.assertEqual(frame.loc[1, "first_counterexample"], "Bw")
        parsed = pd.read_csv(io.StringIO(exporter.render(sample_report())))
        self.assertEqual(list(parsed["failures"]), [0, 2])

    def test_registry(self):
        self.assertEqual(formatter_registry.list_formatters(), ["csv", "dot", "json", "markdown"])
        self.assertIsInstance(formatter_registry.get_formatter("json"), JsonFormatter)
        self.assertIsInstance(formatter_registry.get_formatter("markdown"), MarkdownFormatter)
        with self.assertRaises(FormatterError):
            formatter_registry.get_formatter("yaml")

    def test_registry_passes_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            config = FormatterConfig(output_directory=tmp, overwrite_existing=False)
            exporter = formatter_registry.get_formatter("csv", config)
            self.assertIsInstance(exporter, TableExporter)
            written = exporter.write(sample_report(), "claims.csv")
            self.assertEqual(written, Path(tmp) / "claims.csv")
            with self.assertRaises(FormatterError):
                exporter.write(sample_report(), "claims.csv")


if __name__ == '__main__':
    unittest.main()
