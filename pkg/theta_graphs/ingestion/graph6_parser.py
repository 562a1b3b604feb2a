"""
graph6 codec.

Encoding and decoding go through networkx; this module adds the strict
checks networkx leaves out (header, byte range, truncated vertex count,
nonzero padding bits) and converts to and from ``Graph``.
"""

import logging
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple

import networkx as nx

from ..models import Graph

logger = logging.getLogger(__name__)


class Graph6ParseError(ValueError):
    """Raised when a graph6 string is malformed."""
    pass


HEADER = ">>graph6<<"
MIN_BYTE = 63
MAX_BYTE = 126


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 string.

    Args:
        text: graph6 text, optionally prefixed by the ``>>graph6<<`` header

    Returns:
        Decoded graph

    Raises:
        Graph6ParseError: On a bad header, a byte outside 63..126, truncated
            data, nonzero padding bits or trailing characters
    """
    data = text.strip()
    if data.startswith(">>"):
        if not data.startswith(HEADER):
            raise Graph6ParseError(f"Malformed header in {text!r}")
        data = data[len(HEADER):]
    if not data:
        raise Graph6ParseError("Empty graph6 string")

    for position, char in enumerate(data):
        if not MIN_BYTE <= ord(char) <= MAX_BYTE:
            raise Graph6ParseError(f"Byte {ord(char)} at position {position} out of range")

    try:
        decoded = nx.from_graph6_bytes(data.encode("ascii"))
    except IndexError:
        raise Graph6ParseError("Truncated vertex count") from None
    except (ValueError, nx.NetworkXError) as e:
        raise Graph6ParseError(f"Bad adjacency data: {e}") from e

    n = decoded.number_of_nodes()
    padding = -(n * (n - 1) // 2) % 6
    if n > 1 and (ord(data[-1]) - MIN_BYTE) & ((1 << padding) - 1):
        raise Graph6ParseError("Nonzero padding bits")

    return Graph.from_edges(n, decoded.edges())


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 text without header or newline."""
    encoded = nx.to_graph6_bytes(g.to_networkx(), header=False)
    return encoded.decode("ascii").rstrip("\n")


class Graph6Parser:
    """Reader for graph6 files and streams, one graph per line."""

    def iter_lines(self, lines: Iterable[str], source: str = "<stream>") -> Iterator[Tuple[int, Graph]]:
        """
        Decode graph6 lines, skipping blank ones.

        Yields:
            ``(line_number, graph)`` pairs

        Raises:
            Graph6ParseError: With the source and line number of the bad line
        """
        for number, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                yield number, parse_graph6(line)
            except Graph6ParseError as e:
                raise Graph6ParseError(f"{source}:{number}: {e}") from e

    def parse_file(self, file_path: str) -> List[Graph]:
        """
        Read every graph in a graph6 file.

        Raises:
            Graph6ParseError: If the file is missing or a line is malformed
        """
        path = Path(file_path)
        if not path.exists():
            raise Graph6ParseError(f"graph6 file not found: {file_path}")

        logger.info(f"Reading graph6 corpus: {file_path}")
        with open(path, "r", encoding="ascii", errors="replace") as f:
            graphs = [g for _, g in self.iter_lines(f, source=str(path))]
        logger.info(f"Read {len(graphs)} graphs from {file_path}")
        return graphs

    def write_file(self, graphs: Iterable[Graph], file_path: str, header: bool = False) -> int:
        """Write graphs one per line; returns the number written."""
        count = 0
        with open(file_path, "w", encoding="ascii") as f:
            for g in graphs:
                f.write((HEADER if header else "") + emit_graph6(g) + "\n")
                count += 1
        logger.info(f"Wrote {count} graphs to {file_path}")
        return count
