"""
Theta Graphs

The Djoković-Winkler relation Θ on the edges of a graph, its complement Θ̄
and their transitive closures. Distance sets between edge pairs recognize
trees, block graphs, graphs of diameter two and complete multipartite
graphs; relation graphs of Θ̄ can be realized back to the graph they came
from.

Core Components:
- Graph core (distances, generators, isomorphism, induced patterns)
- graph6 and relation-graph ingestion
- Relations, recognition and realizability analysis
- Exhaustive property suite over small graphs
- DOT, JSON, Markdown and CSV output

Usage:
    from theta_graphs import ThetaGraphProcessor, RelationKind

    processor = ThetaGraphProcessor()
    g = processor.generate_multipartite([1, 2, 4])
    report = processor.classes(g, RelationKind.THETA_BAR)
"""

__version__ = "1.0.0"
__author__ = "Theta Graphs Team"

# Core imports for external usage
from .processor import FastPathMismatchError, ProcessingError, ThetaGraphProcessor
from .models import (
    ClassReport, CorpusSpec, DeltaSet, DistanceMatrix, EdgePartition, EdgeRelation,
    Graph, GraphError, PartSizes, PropertyReport, RealizationResult,
    RecognitionReport, RelationKind, Triviality, TrivialityKind,
)

# Ingestion components
from .ingestion.graph6_parser import Graph6ParseError, Graph6Parser, emit_graph6, parse_graph6

__all__ = [
    # Core processor
    "ThetaGraphProcessor",
    "ProcessingError",
    "FastPathMismatchError",

    # Data models
    "ClassReport",
    "CorpusSpec",
    "DeltaSet",
    "DistanceMatrix",
    "EdgePartition",
    "EdgeRelation",
    "Graph",
    "GraphError",
    "PartSizes",
    "PropertyReport",
    "RealizationResult",
    "RecognitionReport",
    "RelationKind",
    "Triviality",
    "TrivialityKind",

    # Ingestion components
    "Graph6ParseError",
    "Graph6Parser",
    "emit_graph6",
    "parse_graph6",
]
