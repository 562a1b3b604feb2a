#!/usr/bin/env python3
"""
Unit tests for the graph6 codec and the Graph6Parser file reader.
"""

import sys
import tempfile
import unittest
from pathlib import Path

import networkx as nx

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from theta_graphs.graph import complete, complete_multipartite, cycle, empty, path, star
from theta_graphs.graph.generators import gem, x_house
from theta_graphs.ingestion import Graph6ParseError, Graph6Parser, emit_graph6, parse_graph6
from theta_graphs.models import Graph


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestGraph6Codec(unittest.TestCase):
    """Encoding and decoding single graph6 strings."""

    def test_known_encodings(self):
        self.assertEqual(emit_graph6(empty(0)), "?")
        self.assertEqual(emit_graph6(complete(1)), "@")
        self.assertEqual(emit_graph6(complete(2)), "A_")
        self.assertEqual(emit_graph6(complete(3)), "Bw")
        self.assertEqual(emit_graph6(path(3)), "Bg")

    def test_decode_known(self):
        self.assertEqual(parse_graph6("Bw").edges, ((0, 1), (0, 2), (1, 2)))
        self.assertEqual(parse_graph6("Bg").edges, ((0, 1), (1, 2)))
        self.assertEqual(parse_graph6("@").n, 1)
        self.assertEqual(parse_graph6(">>graph6<<A_\n").edges, ((0, 1),))

    def test_matches_networkx(self):
        graphs = [gem(), x_house(), cycle(7), star(5), complete_multipartite([1, 2, 4]),
                  path(63), complete(64)]
        for g in graphs:
            expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
            self.assertEqual(emit_graph6(g), expected)
            decoded = nx.from_graph6_bytes(emit_graph6(g).encode())
            self.assertEqual(
                sorted(tuple(sorted(e)) for e in decoded.edges()), list(g.edges)
            )

    def test_long_vertex_count_round_trip(self):
        g = path(63)
        text = emit_graph6(g)
        self.assertTrue(text.startswith("~"))
        self.assertEqual(parse_graph6(text), g)

    def test_malformed_inputs(self):
        bad = {
            "": "empty",
            ">>graph7<<A_": "header",
            "A\x7f": "byte out of range",
            "A`": "nonzero padding",
            "B": "truncated",
            "A__": "trailing",
            "~??": "truncated vertex count",
            "A>": "byte below range",
            "D?A": "nonzero padding after ten bits",
        }
        for text, reason in bad.items():
            with self.subTest(reason=reason):
                with self.assertRaises(Graph6ParseError):
                    parse_graph6(text)

    def test_parse_error_is_value_error(self):
        with self.assertRaises(ValueError):
            parse_graph6("A`")


class TestGraph6Parser(unittest.TestCase):
    """Reading and writing graph6 files."""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.addCleanup(self.temp_dir.cleanup)
        self.parser = Graph6Parser()

    def test_write_then_read(self):
        graphs = [complete(4), cycle(5), gem()]
        target = Path(self.temp_dir.name) / "corpus.g6"
        self.assertEqual(self.parser.write_file(graphs, str(target)), 3)
        self.assertEqual(self.parser.parse_file(str(target)), graphs)

    def test_blank_lines_and_headers(self):
        lines = [">>graph6<<Bw\n", "\n", "Bg\n"]
        parsed = list(self.parser.iter_lines(lines))
        self.assertEqual([number for number, _ in parsed], [1, 3])

    def test_error_reports_line(self):
        target = Path(self.temp_dir.name) / "broken.g6"
        target.write_text("Bw\nA`\n", encoding="ascii")
        with self.assertRaises(Graph6ParseError) as context:
            self.parser.parse_file(str(target))
        self.assertIn(":2:", str(context.exception))

    def test_missing_file(self):
        with self.assertRaises(Graph6ParseError):
            self.parser.parse_file(str(Path(self.temp_dir.name) / "absent.g6"))


if __name__ == '__main__':
    unittest.main()
