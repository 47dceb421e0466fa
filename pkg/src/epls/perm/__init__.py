"""
Permutations, permutation groups and their actions.
"""
from .permutation import Permutation, compose, identity
from .group import (PermGroup, StabilizerChain, cyclic_group, group_from_generators,
                    subgroup_from_elements, symmetric_group)
from .actions import (InducedAction, SetOrbit, canonical_set, induced_action, normalizer,
                      set_orbit, set_orbits, setwise_stabilizer_via_orbit)
from .blocks import (is_primitive, minimal_block, nontrivial_block, rank_and_subdegrees,
                     suborbits)


def orbit(group: PermGroup, x: int):
    return group.orbit(x)


def point_stabilizer(group: PermGroup, x: int) -> PermGroup:
    return group.point_stabilizer(x)


def pointwise_stabilizer(group: PermGroup, xs) -> PermGroup:
    return group.pointwise_stabilizer(xs)


def fixed_points(group: PermGroup):
    return group.fixed_points()


def is_transitive(group: PermGroup) -> bool:
    return group.is_transitive()
