"""
Constructors for the graph families used throughout the package.

Products and joins record where each vertex came from in ``Graph.labels``:
a product vertex is labelled ``(a, x)`` and a join vertex ``(side, v)``.
"""

import logging
import re
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from ..models import Graph, GraphError

logger = logging.getLogger(__name__)


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    if n < 0:
        raise GraphError(f"empty() needs n >= 0, got {n}")
    return Graph.from_edges(n, [], name=f"E{n}")


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"complete() needs n >= 0, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2), name=f"K{n}")


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise GraphError(f"path() needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle() needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def star(n: int) -> Graph:
    """Star K_{1,n}: centre 0 and ``n`` leaves."""
    if n < 0:
        raise GraphError(f"star() needs n >= 0, got {n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)], name=f"S{n}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """
    Complete multipartite graph with the given part sizes.

    Vertices are numbered part by part in the order given and labelled
    ``(part_index, index_in_part)``.

    Raises:
        GraphError: If there are no parts or a part is empty
    """
    if not parts or any(size < 1 for size in parts):
        raise GraphError(f"Part sizes must be positive and non-empty: {list(parts)}")

    labels: List[Tuple[int, int]] = []
    for index, size in enumerate(parts):
        labels.extend((index, i) for i in range(size))

    edges = [
        (u, v)
        for u, v in combinations(range(len(labels)), 2)
        if labels[u][0] != labels[v][0]
    ]
    name = "K_{" + ",".join(str(s) for s in parts) + "}"
    return Graph.from_edges(len(labels), edges, labels=labels, name=name)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """
    Cartesian product ``g □ h``.

    Vertex ``(a, x)`` is numbered ``a * h.n + x``; ``(a, x)`` and ``(b, y)``
    are adjacent when ``a == b`` and ``xy`` is an edge of ``h``, or ``x == y``
    and ``ab`` is an edge of ``g``.
    """
    def index(a: int, x: int) -> int:
        return a * h.n + x

    edges = []
    for a in range(g.n):
        for x, y in h.edges:
            edges.append((index(a, x), index(a, y)))
    for a, b in g.edges:
        for x in range(h.n):
            edges.append((index(a, x), index(b, x)))

    labels = [(a, x) for a in range(g.n) for x in range(h.n)]
    name = f"{g.name or 'G'}□{h.name or 'H'}"
    return Graph.from_edges(g.n * h.n, edges, labels=labels, name=name)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of ``h`` follow those of ``g``."""
    shift = g.n
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    labels = [(0, v) for v in range(g.n)] + [(1, v) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges, labels=labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    union = disjoint_union(g, h)
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    name = f"{g.name or 'G'}▷◁{h.name or 'H'}"
    return Graph.from_edges(
        union.n, list(union.edges) + cross, labels=union.labels, name=name
    )


def paw() -> Graph:
    """Triangle 012 with pendant vertex 3 on vertex 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)], name="paw")


def diamond() -> Graph:
    """K4 minus the edge 23."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], name="diamond")


def gem() -> Graph:
    """Path 0123 plus vertex 4 adjacent to all of it."""
    edges = [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)]
    return Graph.from_edges(5, edges, name="gem")


def x_house() -> Graph:
    """Square 0123 with both diagonals and roof vertex 4 on side 01."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3), (0, 4), (1, 4)]
    return Graph.from_edges(5, edges, name="x-house")


def two_k2() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)], name="2K2")


def k23() -> Graph:
    return complete_multipartite([2, 3])


def friendship(k: int) -> Graph:
    """``k`` triangles sharing vertex 0."""
    if k < 1:
        raise GraphError(f"friendship() needs k >= 1, got {k}")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges.extend([(0, a), (0, b), (a, b)])
    return Graph.from_edges(2 * k + 1, edges, name=f"F{k}")


NAMED_GRAPHS: Dict[str, Callable[[], Graph]] = {
    "paw": paw,
    "diamond": diamond,
    "gem": gem,
    "x-house": x_house,
    "2k2": two_k2,
    "k23": k23,
}

FAMILY_PATTERN = re.compile(r"^([PCSE])(\d+)$", re.IGNORECASE)
COMPLETE_PATTERN = re.compile(r"^K_?\{?(\d+(?:,\d+)*)\}?$", re.IGNORECASE)


def parse_graph_token(token: str) -> Graph:
    """
    Build a graph from a short token.

    Accepted tokens: ``K<n>``, ``P<n>``, ``C<n>``, ``S<n>``, ``E<n>``,
    ``K<a,b,...>`` (complete multipartite, also ``K_{a,b}``) and the named
    patterns in ``NAMED_GRAPHS``.

    Raises:
        GraphError: If the token is not recognised
    """
    text = token.strip()
    match = COMPLETE_PATTERN.match(text)
    if match:
        sizes = [int(s) for s in match.group(1).split(",")]
        return complete(sizes[0]) if len(sizes) == 1 else complete_multipartite(sizes)

    match = FAMILY_PATTERN.match(text)
    if match:
        family, size = match.group(1).upper(), int(match.group(2))
        builder = {"P": path, "C": cycle, "S": star, "E": empty}[family]
        return builder(size)

    named = NAMED_GRAPHS.get(text.lower())
    if named is not None:
        return named()

    raise GraphError(f"Unrecognised graph token: {token!r}")
