"""
JSON Formatter
==============

Deterministic JSON for every report type: keys are sorted, sets become
sorted lists and infinite distances are written as the string "inf".
"""

import json
import math
from enum import Enum
from typing import Any

from .base_formatter import BaseFormatter, FormatterError


def to_jsonable(obj: Any) -> Any:
    """Convert report values into plain JSON types."""
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    # numpy scalars
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"Not JSON serializable: {type(obj).__name__}")


class JsonFormatter(BaseFormatter):
    """Renders reports, results and plain dictionaries as JSON."""

    def render(self, obj: Any) -> str:
        try:
            payload = to_jsonable(obj)
        except TypeError as e:
            raise FormatterError(str(e)) from e
        return json.dumps(payload, sort_keys=True, indent=self.config.indent,
                          ensure_ascii=False, allow_nan=False) + "\n"
