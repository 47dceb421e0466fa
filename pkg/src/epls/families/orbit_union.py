"""
Linear spaces assembled from set orbits, and the small explicit groups they
are built from.
"""
import logging
from itertools import combinations
from typing import Iterable, Optional, Sequence

from ..core.errors import ParameterError
from ..linspace.space import LinearSpace, validate
from ..perm.actions import set_orbits
from ..perm.group import PermGroup, group_from_generators
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)

# C_5^2 x| C_3 on 25 points, the first primitive group of degree 25
PRIMITIVE_25_1_CYCLES = (
    [(1, 18, 5), (2, 24, 10), (3, 6, 15), (4, 12, 20), (7, 23, 8), (9, 14, 13),
     (11, 16, 19), (17, 22, 21)],
    [(0, 1, 2, 4, 3), (5, 6, 7, 9, 8), (10, 11, 12, 14, 13), (15, 16, 17, 19, 18),
     (20, 21, 22, 24, 23)],
)

# Seed lines whose two orbits form a (25, 4, 8, 50) space
PRIMITIVE_25_1_SEEDS = ((0, 1, 5, 18), (0, 2, 10, 24))


def primitive_25_1() -> PermGroup:
    gens = [Permutation.from_cycles(25, cycles) for cycles in PRIMITIVE_25_1_CYCLES]
    return group_from_generators(gens, order=75)


def build_orbit_union_space(group: PermGroup, seeds: Iterable[Sequence[int]],
                            limit: Optional[int] = None) -> LinearSpace:
    """
    The union of the set orbits of the seed lines, validated as a linear space.

    Raises:
        LinearSpaceError: if the orbits do not form a linear space
        BoundExceededError: if an orbit exceeds the set-orbit bound
    """
    orbits = set_orbits(group, seeds, limit=limit)
    lines = [line for orbit in orbits for line in orbit.members]
    logger.debug("Orbit union: %d orbits, %d lines", len(orbits), len(lines))
    return validate(group.degree, lines)


def _index_two_subgroup(group: PermGroup) -> PermGroup:
    half = group.order() // 2
    elements = [g for g in group.elements() if not g.is_identity()]
    for g in elements:
        if g.order() == half:
            return group_from_generators([g], order=half)
    for a, b in combinations(elements, 2):
        sub = group_from_generators([a, b])
        if sub.order() == half:
            return sub
    raise ParameterError(f"no index-2 subgroup generated by at most two elements "
                         f"in a group of order {group.order()}")


def coset_crosspairs_space(group: PermGroup) -> LinearSpace:
    """
    Linear space on the points of a regular group of even degree k.

    The two orbits of an index-2 subgroup are lines of size k/2; every pair
    across them is a line of size 2. The space is invariant under the group.

    Raises:
        ParameterError: if the group is not regular of even degree
    """
    if not group.is_regular() or group.degree % 2:
        raise ParameterError("coset cross pairs need a regular group of even degree")
    halves = _index_two_subgroup(group).orbits()
    if len(halves) != 2:
        raise ParameterError(f"index-2 subgroup has {len(halves)} orbits")
    first, second = halves
    lines = [first, second] + [(a, b) for a in first for b in second]
    return validate(group.degree, lines)
