"""
Output Formatters
=================

Formatters render graphs, relation graphs and reports as text:
- DOT for graphs and relation graphs
- JSON (schema 1) for recognition, realization and property reports
- Markdown summaries of property suite runs
- CSV tables of per-claim verdicts via pandas

All formatters inherit from BaseFormatter and are registered by name.
"""

from .base_formatter import (
    BaseFormatter, FormatterConfig, FormatterError, FormatterRegistry, formatter_registry,
)
from .dot_formatter import DotFormatter, emit_dot
from .json_formatter import JsonFormatter, to_jsonable
from .markdown_formatter import MarkdownFormatter
from .table_exporter import TableExporter

formatter_registry.register("dot", DotFormatter)
formatter_registry.register("json", JsonFormatter)
formatter_registry.register("markdown", MarkdownFormatter)
formatter_registry.register("csv", TableExporter)

__all__ = [
    "BaseFormatter",
    "FormatterConfig",
    "FormatterError",
    "FormatterRegistry",
    "formatter_registry",
    "DotFormatter",
    "emit_dot",
    "JsonFormatter",
    "to_jsonable",
    "MarkdownFormatter",
    "TableExporter",
]
