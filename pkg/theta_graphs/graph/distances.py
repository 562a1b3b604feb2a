"""
Shortest-path distances on unweighted graphs.

Distances are held in a float64 numpy matrix so that unreachable pairs carry
IEEE infinity and sums involving them stay infinite.
"""

import logging
from collections import deque
from typing import Iterable, List, Optional

import numpy as np

from ..models import Distance, DistanceMatrix, Graph, GraphError

logger = logging.getLogger(__name__)


def bfs_all_pairs(g: Graph) -> DistanceMatrix:
    """
    Compute all-pairs shortest-path distances by one BFS per vertex.

    Args:
        g: Graph to measure

    Returns:
        DistanceMatrix with ``inf`` between different components
    """
    values = np.full((g.n, g.n), np.inf, dtype=np.float64)
    for source in range(g.n):
        row = values[source]
        row[source] = 0.0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            step = row[u] + 1.0
            for v in g.adjacency[u]:
                if row[v] == np.inf:
                    row[v] = step
                    queue.append(v)
    values.setflags(write=False)
    return DistanceMatrix(values)


def connected_components(g: Graph) -> List[List[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        members = []
        while stack:
            u = stack.pop()
            members.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        components.append(sorted(members))
    return components


def edge_bearing_components(g: Graph) -> List[List[int]]:
    """Components that contain at least one edge."""
    return [c for c in connected_components(g) if len(c) > 1]


def is_connected(g: Graph) -> bool:
    """True for a graph with exactly one component (K1 included)."""
    return g.n >= 1 and len(connected_components(g)) == 1


def diameter(g: Graph, d: Optional[DistanceMatrix] = None) -> Distance:
    """Largest distance in ``g``; ``inf`` when disconnected."""
    if d is None:
        d = bfs_all_pairs(g)
    return d.diameter


def is_isometric_subgraph(
    g: Graph, vertices: Iterable[int], d: Optional[DistanceMatrix] = None
) -> bool:
    """
    Check whether the subgraph induced by ``vertices`` is isometric in ``g``.

    Args:
        g: Host graph
        vertices: Vertex set of the induced subgraph
        d: Host distances, computed when omitted

    Returns:
        True when distances inside the subgraph equal host distances

    Raises:
        GraphError: If ``vertices`` is empty, repeats a vertex or names one
            outside ``0..n-1``
    """
    chosen = list(vertices)
    if not chosen:
        raise GraphError("Isometry check needs a nonempty vertex subset")
    keep = sorted(set(chosen))
    if len(keep) != len(chosen):
        raise GraphError(f"Vertex subset repeats a vertex: {chosen}")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise GraphError(f"Vertex subset {chosen} out of range for n={g.n}")

    if d is None:
        d = bfs_all_pairs(g)
    inner = bfs_all_pairs(g.induced_subgraph(keep)).values
    outer = d.values[np.ix_(keep, keep)]
    return bool(np.array_equal(inner, outer))
