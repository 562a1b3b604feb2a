"""
Induced-subgraph detection over a registry of named patterns.

The search is exhaustive over vertex subsets of the pattern's size, which is
what the small graphs studied here call for.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, Iterator, Optional, Tuple, Union

from ..models import Graph
from .generators import (
    complete, complete_multipartite, cycle, diamond, gem, path, paw, star,
    two_k2, x_house,
)
from .isomorphism import is_isomorphic

logger = logging.getLogger(__name__)


class UnknownPatternError(KeyError):
    """Raised when a pattern name is not in the registry."""
    pass


PATTERNS: Dict[str, Callable[[], Graph]] = {
    "K2": lambda: complete(2),
    "K3": lambda: complete(3),
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "2K2": two_k2,
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "C4": lambda: cycle(4),
    "claw": lambda: star(3),
    "paw": paw,
    "diamond": diamond,
    "gem": gem,
    "X-house": x_house,
    "K2,3": lambda: complete_multipartite([2, 3]),
}


def get_pattern(name: str) -> Graph:
    """
    Look up a pattern by name.

    Raises:
        UnknownPatternError: If ``name`` is not registered
    """
    try:
        return PATTERNS[name]()
    except KeyError:
        raise UnknownPatternError(name) from None


def induced_copies(
    g: Graph, pattern: Union[str, Graph]
) -> Iterator[Tuple[int, ...]]:
    """
    Every vertex set of ``g`` inducing a copy of ``pattern``.

    Raises:
        UnknownPatternError: If a pattern name is not registered
    """
    target = get_pattern(pattern) if isinstance(pattern, str) else pattern
    k = target.n
    if k > g.n:
        return

    degrees = target.degree_sequence()
    for subset in combinations(range(g.n), k):
        inner = sum(1 for u, v in combinations(subset, 2) if v in g.adjacency[u])
        if inner != target.m:
            continue
        candidate = g.induced_subgraph(subset)
        if candidate.degree_sequence() == degrees and is_isomorphic(candidate, target):
            yield subset


def contains_induced(
    g: Graph, pattern: Union[str, Graph]
) -> Optional[Tuple[int, ...]]:
    """
    Find an induced copy of ``pattern`` in ``g``.

    Args:
        g: Host graph
        pattern: Registered pattern name or an explicit graph

    Returns:
        Sorted vertex set of one induced copy, or None

    Raises:
        UnknownPatternError: If a pattern name is not registered
    """
    return next(induced_copies(g, pattern), None)


def is_free_of(g: Graph, *patterns: Union[str, Graph]) -> bool:
    """True when ``g`` contains none of ``patterns`` as induced subgraphs."""
    return all(contains_induced(g, p) is None for p in patterns)


def find_clique(g: Graph, k: int) -> Optional[Tuple[int, ...]]:
    """Vertex set of some k-clique in ``g``, or None."""
    if k <= 0:
        return ()
    candidates = [v for v in range(g.n) if g.degree(v) >= k - 1]

    def grow(chosen: Tuple[int, ...], pool: list) -> Optional[Tuple[int, ...]]:
        if len(chosen) == k:
            return chosen
        for i, v in enumerate(pool):
            if len(chosen) + len(pool) - i < k:
                break
            found = grow(chosen + (v,), [u for u in pool[i + 1:] if u in g.adjacency[v]])
            if found is not None:
                return found
        return None

    return grow((), candidates)
