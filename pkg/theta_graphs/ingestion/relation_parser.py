"""
Parser for relation graphs supplied to the realizability check.

A relation graph arrives either as graph6 (one vertex per EdgeId) or as a
JSON pair list: ``{"size": m, "pairs": [[e, f], ...]}`` or a bare list of
pairs, in which case the size is one more than the largest EdgeId.
"""

import json
import logging
from pathlib import Path
from typing import Any

from ..models import EdgeRelation, GraphError, RelationKind
from .graph6_parser import Graph6ParseError, parse_graph6

logger = logging.getLogger(__name__)


class RelationParseError(ValueError):
    """Raised when a relation cannot be read."""
    pass


class RelationParser:
    """Reads relation graphs from text or files."""

    def parse(self, text: str) -> EdgeRelation:
        """
        Parse graph6 or JSON text into a relation.

        Raises:
            RelationParseError: If the text is neither valid graph6 nor a
                well-formed pair list
        """
        stripped = text.strip()
        if stripped[:1] in ("{", "["):
            return self._parse_json(stripped)
        try:
            relation_graph = parse_graph6(stripped)
        except Graph6ParseError as e:
            raise RelationParseError(f"Invalid graph6 relation: {e}") from e
        return EdgeRelation.from_graph(relation_graph, RelationKind.CUSTOM)

    def parse_file(self, file_path: str) -> EdgeRelation:
        path = Path(file_path)
        if not path.exists():
            raise RelationParseError(f"Relation file not found: {file_path}")
        logger.debug(f"Reading relation from {file_path}")
        return self.parse(path.read_text(encoding="utf-8"))

    def _parse_json(self, text: str) -> EdgeRelation:
        try:
            payload: Any = json.loads(text)
        except json.JSONDecodeError as e:
            raise RelationParseError(f"Invalid JSON: {e}") from e

        if isinstance(payload, dict):
            pairs = payload.get("pairs")
            size = payload.get("size")
        else:
            pairs, size = payload, None

        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
            for p in pairs
        ):
            raise RelationParseError("Pairs must be a list of [e, f] integer pairs")

        if size is None:
            size = 1 + max((max(p) for p in pairs), default=-1)
        if not isinstance(size, int) or size < 0:
            raise RelationParseError(f"Invalid relation size: {size!r}")

        try:
            return EdgeRelation.from_pairs(size, [tuple(p) for p in pairs])  # type: ignore[misc]
        except GraphError as e:
            raise RelationParseError(str(e)) from e
