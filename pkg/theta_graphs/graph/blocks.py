"""
Blocks (biconnected components), articulation points and cut edges.

Iterative Hopcroft-Tarjan: one DFS tracking discovery times and low points,
with an edge stack that is cut off whenever a child's low point does not
reach above its parent.
"""

import logging
from collections import Counter
from typing import List, Tuple

from ..models import Graph

logger = logging.getLogger(__name__)


def biconnected_components(g: Graph) -> List[List[Tuple[int, int]]]:
    """
    Edge sets of the blocks of ``g``.

    Isolated vertices belong to no returned block.

    Returns:
        Blocks as sorted edge lists, ordered by their first edge
    """
    discovery = [-1] * g.n
    low = [0] * g.n
    clock = 0
    blocks: List[List[Tuple[int, int]]] = []

    for root in range(g.n):
        if discovery[root] != -1:
            continue
        discovery[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        edge_stack: List[Tuple[int, int]] = []

        while stack:
            v, parent, pending = stack[-1]
            descended = False
            for w in pending:
                if discovery[w] == -1:
                    edge_stack.append((v, w))
                    discovery[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    descended = True
                    break
                if w != parent and discovery[w] < discovery[v]:
                    # back edge
                    edge_stack.append((v, w))
                    low[v] = min(low[v], discovery[w])
            if descended:
                continue

            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= discovery[u]:
                block = []
                while True:
                    a, b = edge_stack.pop()
                    block.append((a, b) if a < b else (b, a))
                    if (a, b) == (u, v):
                        break
                blocks.append(sorted(block))

    blocks.sort(key=lambda block: block[0])
    logger.debug(f"Found {len(blocks)} blocks in {g}")
    return blocks


def block_vertex_sets(g: Graph) -> List[Tuple[int, ...]]:
    """Vertex sets of the blocks, isolated vertices included as singletons."""
    sets = [
        tuple(sorted({v for edge in block for v in edge}))
        for block in biconnected_components(g)
    ]
    sets.extend((v,) for v in range(g.n) if g.degree(v) == 0)
    return sorted(sets)


def articulation_points(g: Graph) -> List[int]:
    """Vertices lying in more than one block."""
    counts: Counter = Counter()
    for block in biconnected_components(g):
        counts.update({v for edge in block for v in edge})
    return sorted(v for v, c in counts.items() if c > 1)


def cut_edges(g: Graph) -> List[Tuple[int, int]]:
    """Edges whose removal disconnects their component (single-edge blocks)."""
    return sorted(block[0] for block in biconnected_components(g) if len(block) == 1)
