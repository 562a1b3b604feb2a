"""
Processing Module
=================

Corpus enumeration and the property suite.

Components:
- enumerate_graphs: Built-in graphs up to isomorphism, or a graph6 corpus file
- CLAIMS: Registry of checkable statements about Θ, Θ̄ and their closures
- SuiteRunner: Runs claims over a corpus, serially or across processes
"""

from .claims import CLAIMS, Claim, GraphFacts, UnknownClaimError, evaluate, get_claims
from .enumerator import (
    BUILTIN_MAX_N, CorpusError, corpus_list, count_graphs, enumerate_graphs, graphs_on,
)
from .suite_runner import SuiteConfig, SuiteRunner, run_property_suite

__all__ = [
    # Corpus
    "BUILTIN_MAX_N",
    "CorpusError",
    "corpus_list",
    "count_graphs",
    "enumerate_graphs",
    "graphs_on",

    # Claims
    "CLAIMS",
    "Claim",
    "GraphFacts",
    "UnknownClaimError",
    "evaluate",
    "get_claims",

    # Suite
    "SuiteConfig",
    "SuiteRunner",
    "run_property_suite",
]
