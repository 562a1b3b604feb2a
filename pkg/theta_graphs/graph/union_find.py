"""
Disjoint-set forest over the integers ``0..size-1``.

Path halving on ``find`` and union by size.
"""

from typing import Dict, List


class DisjointSet:
    """Union-find over a fixed range of integer elements."""

    def __init__(self, size: int) -> None:
        self._parent: List[int] = list(range(size))
        self._size: List[int] = [1] * size

    def find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of ``x`` and ``y``; False when already merged."""
        root_x, root_y = self.find(x), self.find(y)
        if root_x == root_y:
            return False
        if self._size[root_x] < self._size[root_y]:
            root_x, root_y = root_y, root_x
        self._parent[root_y] = root_x
        self._size[root_x] += self._size[root_y]
        return True

    def labels(self) -> List[int]:
        """Dense set ids, numbered by first appearance in element order."""
        dense: Dict[int, int] = {}
        result = []
        for element in range(len(self._parent)):
            root = self.find(element)
            if root not in dense:
                dense[root] = len(dense)
            result.append(dense[root])
        return result
