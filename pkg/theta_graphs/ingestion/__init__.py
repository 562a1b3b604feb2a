"""
Input parsing: graph6 strings and files, and relation graphs given as
graph6 or JSON pair lists.
"""

from .graph6_parser import Graph6ParseError, Graph6Parser, emit_graph6, parse_graph6
from .relation_parser import RelationParseError, RelationParser

__all__ = [
    "Graph6ParseError",
    "Graph6Parser",
    "emit_graph6",
    "parse_graph6",
    "RelationParseError",
    "RelationParser",
]
