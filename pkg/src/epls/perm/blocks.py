"""
Block systems, primitivity and subdegrees of transitive groups.
"""
import logging
from typing import List, Optional, Tuple

from sympy import isprime

from ..core.errors import IntransitiveError, PointRangeError
from .group import PermGroup

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets over 0..n-1 with union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> int:
        x, y = self.find(x), self.find(y)
        if x == y:
            return x
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return x


def _require_transitive(group: PermGroup):
    if not group.is_transitive():
        raise IntransitiveError(
            f"group on {group.degree} points has {len(group.orbits())} orbits")


def minimal_block(group: PermGroup, seed: Tuple[int, int]) -> Tuple[int, ...]:
    """
    Smallest block of the transitive group containing both seed points.

    Atkinson's refinement: merge the seed classes, then keep merging the
    classes of generator images of every merged pair.
    """
    _require_transitive(group)
    a, b = seed
    for x in seed:
        if not 0 <= x < group.degree:
            raise PointRangeError(f"point {x} outside 0..{group.degree - 1}")
    uf = UnionFind(group.degree)
    queue = []
    if uf.find(a) != uf.find(b):
        uf.union(a, b)
        queue.append((a, b))
    while queue:
        x, y = queue.pop()
        for g in group.generators:
            u, v = uf.find(g[x]), uf.find(g[y])
            if u != v:
                uf.union(u, v)
                queue.append((u, v))
    root = uf.find(a)
    return tuple(x for x in range(group.degree) if uf.find(x) == root)


def suborbits(group: PermGroup, point: int = 0) -> List[Tuple[int, ...]]:
    """Orbits of the stabilizer of point, ordered by least element."""
    _require_transitive(group)
    return group.point_stabilizer(point).orbits()


def nontrivial_block(group: PermGroup) -> Optional[Tuple[int, ...]]:
    """A block of size strictly between 1 and the degree, or None if primitive."""
    _require_transitive(group)
    n = group.degree
    if n <= 3 or isprime(n):
        return None
    for orb in suborbits(group, 0):
        if orb == (0,):
            continue
        block = minimal_block(group, (0, orb[0]))
        if len(block) < n:
            logger.debug("Block %s found on %d points", block, n)
            return block
    return None


def is_primitive(group: PermGroup) -> bool:
    """
    True if the transitive group preserves no nontrivial block system.

    The trivial group on one point and every transitive group of prime degree
    count as primitive.

    Raises:
        IntransitiveError: if the group is not transitive
    """
    return nontrivial_block(group) is None


def rank_and_subdegrees(group: PermGroup) -> Tuple[int, ...]:
    """Sorted orbit sizes of the stabilizer of 0, the trivial orbit included."""
    return tuple(sorted(len(orb) for orb in suborbits(group, 0)))

