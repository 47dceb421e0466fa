"""
Group actions beyond points: orbits of point sets, setwise stabilizers,
normalizers by enumeration, and actions induced on invariant subsets.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..core.config import Config
from ..core.errors import (BoundExceededError, EplsError, NotInvariantError,
                           ParameterError, PointRangeError)
from ..safety.validator import ScaleValidator, enforce
from .group import PermGroup, StabilizerChain, group_from_generators, subgroup_from_elements
from .permutation import Permutation

logger = logging.getLogger(__name__)

PointSet = Tuple[int, ...]


def canonical_set(points: Iterable[int]) -> PointSet:
    """Sorted, deduplicated tuple used as the hashable form of a point set."""
    return tuple(sorted(set(points)))


@dataclass
class SetOrbit:
    """
    Orbit of a point set under a group acting on sets.

    Attributes:
        group: the acting group
        seed: canonical form of the starting set
        members: orbit members in breadth-first discovery order
        schreier: member -> element carrying seed to it (empty when not recorded)
    """
    group: PermGroup
    seed: PointSet
    members: List[PointSet]
    schreier: Dict[PointSet, Permutation] = field(default_factory=dict)

    def __post_init__(self):
        self._index = set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s) -> bool:
        return canonical_set(s) in self._index

    def __iter__(self):
        return iter(self.members)


def set_orbit(group: PermGroup, s: Iterable[int], limit: Optional[int] = None,
              record: bool = True) -> SetOrbit:
    """
    Breadth-first orbit of s under group, generators applied in input order.

    Each frontier is imaged under all generators at once with numpy.

    Raises:
        BoundExceededError: if the orbit grows beyond limit (default Config.SET_ORBIT_LIMIT)
    """
    limit = Config.SET_ORBIT_LIMIT if limit is None else limit
    seed = canonical_set(s)
    if not seed:
        raise ParameterError("cannot orbit the empty set")
    if seed[0] < 0 or seed[-1] >= group.degree:
        raise PointRangeError(f"set {seed} is not inside 0..{group.degree - 1}")
    members = [seed]
    seen = {seed}
    schreier = {seed: Permutation.identity(group.degree)} if record else {}
    frontier = [seed]
    arrays = [g.array for g in group.generators]
    while frontier:
        block = np.asarray(frontier, dtype=np.int64)
        images = [np.sort(a[block], axis=1).tolist() for a in arrays]
        next_frontier = []
        for i, member in enumerate(frontier):
            for j, g in enumerate(group.generators):
                image = tuple(images[j][i])
                if image in seen:
                    continue
                seen.add(image)
                members.append(image)
                next_frontier.append(image)
                if record:
                    schreier[image] = schreier[member] * g
                if len(members) > limit:
                    raise BoundExceededError(
                        f"set orbit exceeds {limit} sets; instance is stretch-scale",
                        bound=limit)
        frontier = next_frontier
    logger.debug("Set orbit of %s has size %d", seed, len(members))
    return SetOrbit(group, seed, members, schreier)


def set_orbits(group: PermGroup, sets: Iterable[Iterable[int]],
               limit: Optional[int] = None) -> List[SetOrbit]:
    """Distinct orbits met by the given sets, in order of first appearance."""
    orbits: List[SetOrbit] = []
    for s in sets:
        key = canonical_set(s)
        if any(key in orb for orb in orbits):
            continue
        orbits.append(set_orbit(group, key, limit=limit, record=False))
    return orbits


def setwise_stabilizer_via_orbit(group: PermGroup, s: Iterable[int],
                                 limit: Optional[int] = None) -> Tuple[PermGroup, int]:
    """
    Stabilizer of the set s from Schreier generators of its set orbit.

    Returns:
        tuple: (stabilizer, orbit size) with |group| = orbit size * |stabilizer|

    Raises:
        BoundExceededError: if the orbit exceeds the set-orbit bound
    """
    orbit = set_orbit(group, s, limit=limit, record=True)
    order = group.order()
    if order % len(orbit):
        raise EplsError(f"orbit size {len(orbit)} does not divide |G| = {order}")
    target = order // len(orbit)
    chain = StabilizerChain(group.degree, group.base, order_hint=target)
    kept: List[Permutation] = []
    for member in orbit.members:
        if chain._complete():
            break
        u = orbit.schreier[member]
        for g in group.generators:
            image = g.image_of_set(member)
            h = u * g * orbit.schreier[image].inverse()
            if chain.extend(h):
                kept.append(h)
                if chain._complete():
                    break
    if chain.order() != target:
        raise EplsError(
            f"setwise stabilizer has order {chain.order()}, expected {target}")
    if not kept:
        kept = [Permutation.identity(group.degree)]
    return PermGroup(kept, order=target, chain=chain), len(orbit)


def normalizer(group: PermGroup, sub: PermGroup, limit: Optional[int] = None) -> PermGroup:
    """
    N_G(H) by filtering the elements of G on conjugation invariance of H.

    Raises:
        BoundExceededError: if |G| exceeds limit (default Config.NORMALIZER_LIMIT);
            use setwise_stabilizer_via_orbit instead
        ParameterError: if sub is not a subgroup of group
    """
    limit = Config.NORMALIZER_LIMIT if limit is None else limit
    enforce(ScaleValidator().validate_group_order(group.order(), limit), bound=limit)
    if not sub.is_subgroup(group):
        raise ParameterError("normalizer needs a subgroup of the group")
    gens = [h for h in sub.generators if not h.is_identity()]
    members = [g for g in group.elements(limit)
               if all(sub.contains(h.conjugate(g)) for h in gens)]
    logger.debug("Normalizer of order %d in group of order %d", len(members), group.order())
    return subgroup_from_elements(group.degree, members, order=len(members))


@dataclass
class InducedAction:
    """
    Group induced on an invariant subset, relabeled onto 0..k-1.

    The relabeling sends the i-th smallest point of the subset to i.
    """
    group: PermGroup
    points: PointSet
    kernel_order: int

    def to_local(self, points: Iterable[int]) -> PointSet:
        index = {x: i for i, x in enumerate(self.points)}
        return canonical_set(index[x] for x in points)

    def to_global(self, labels: Iterable[int]) -> PointSet:
        return canonical_set(self.points[i] for i in labels)


def induced_action(group: PermGroup, domain: Iterable[int]) -> InducedAction:
    """
    Restrict group to a group-invariant domain.

    Raises:
        NotInvariantError: if some generator moves a domain point outside it
    """
    points = canonical_set(domain)
    if not points:
        raise ParameterError("induced action needs a nonempty domain")
    index = {x: i for i, x in enumerate(points)}
    restricted = []
    for g in group.generators:
        try:
            restricted.append(Permutation([index[g[x]] for x in points], check=False))
        except KeyError:
            raise NotInvariantError(f"domain {points} is not invariant under {g}")
    image = group_from_generators(restricted)
    return InducedAction(image, points, group.order() // image.order())
