"""
DOT Formatter
=============

Graphviz DOT text for graphs and for relation graphs over edges. Vertices of
a relation graph are labelled with the host edge they stand for ("uv").
"""

from typing import Any, Optional, Sequence

from ..models import EdgeRelation, Graph
from .base_formatter import BaseFormatter, FormatterConfig


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: Graph, name: str = "G", labels: Optional[Sequence[str]] = None) -> str:
    """
    Undirected DOT text for ``g``.

    Args:
        g: Graph to draw
        name: Graph identifier in the DOT header
        labels: Optional vertex labels, one per vertex

    Returns:
        DOT source ending with a newline
    """
    lines = [f"graph {_quote(name)} {{"]
    for v in g.vertices():
        if labels is not None:
            lines.append(f"  {v} [label={_quote(labels[v])}];")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


class DotFormatter(BaseFormatter):
    """Renders graphs and relation graphs as DOT."""

    def __init__(self, config: Optional[FormatterConfig] = None, host: Optional[Graph] = None):
        super().__init__(config)
        self.host = host

    def render(self, obj: Any) -> str:
        if isinstance(obj, Graph):
            return emit_dot(obj, obj.name or "G")
        if isinstance(obj, EdgeRelation):
            return self.render_relation(obj, self.host)
        raise self._unsupported(obj)

    def render_relation(self, r: EdgeRelation, host: Optional[Graph] = None) -> str:
        """DOT of the relation graph, labelled by host edges when ``host`` is given."""
        labels = None
        if host is not None and host.m == r.size:
            labels = [host.edge_label(e) for e in range(host.m)]
        name = f"G_{r.kind.value}"
        return emit_dot(r.as_graph(), name, labels)
