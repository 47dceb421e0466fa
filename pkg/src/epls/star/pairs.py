"""
A linear space together with a group of its automorphisms, and the flag and
orbit intersection laws of such pairs.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..core.errors import DegreeMismatchError, NotInvariantError, ParameterError
from ..core.report import Verdict
from ..eprim.predicates import is_extremely_primitive
from ..linspace.space import LinearSpace, group_preserves
from ..perm.actions import SetOrbit, set_orbit, set_orbits
from ..perm.group import PermGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupSpacePair:
    """
    A linear space and a group preserving it.

    Raises:
        DegreeMismatchError: if the group does not act on the points of the space
        NotInvariantError: if some generator maps a line off the space
    """
    space: LinearSpace
    group: PermGroup
    _cache: Dict[str, object] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.group.degree != self.space.v:
            raise DegreeMismatchError(
                f"group of degree {self.group.degree} on {self.space.v} points")
        if not group_preserves(self.space, self.group):
            raise NotInvariantError("the group does not preserve the space")

    def point_representatives(self) -> List[int]:
        """Least point of each point orbit; just 0 for transitive groups."""
        return [orb[0] for orb in self.group.orbits()]

    def stabilizer_orbits(self, u: int) -> List[Tuple[int, ...]]:
        key = f"orbits:{u}"
        if key not in self._cache:
            self._cache[key] = self.group.point_stabilizer(u).orbits()
        return self._cache[key]

    def flags(self):
        """(u, line, G_u-orbits) over u in point_representatives() and lines through u."""
        for u in self.point_representatives():
            orbits = self.stabilizer_orbits(u)
            for line in self.space.lines_through(u):
                yield u, line, orbits

    def line_orbits(self) -> List[SetOrbit]:
        if 'line_orbits' not in self._cache:
            self._cache['line_orbits'] = set_orbits(self.group, self.space.lines)
        return self._cache['line_orbits']


def is_transverse(pair: GroupSpacePair) -> Verdict:
    """
    True iff every line meets every G_u-orbit in at most one point.

    Only u in a transversal of the point orbits is scanned; the condition is
    invariant under the group.

    Returns:
        Verdict: witness {'u', 'delta', 'line', 'size'} on failure
    """
    for u, line, orbits in pair.flags():
        points = set(line)
        for delta in orbits:
            size = len(points.intersection(delta))
            if size > 1:
                return Verdict(False, 'not-transverse',
                               {'u': u, 'delta': delta, 'line': line, 'size': size})
    return Verdict(True)


def check_line_block_law(pair: GroupSpacePair) -> Verdict:
    """
    |line & delta| lies in {0, 1, |delta|} for every flag and G_u-orbit delta.

    Returns:
        Verdict: witness {'sizes': observed intersection sizes} when it holds,
                 the offending flag otherwise

    Raises:
        ParameterError: if the group is not extremely primitive
    """
    verdict = is_extremely_primitive(pair.group)
    if not verdict:
        raise ParameterError(
            f"the line-block law needs an extremely primitive group ({verdict.reason})")
    sizes = set()
    for u, line, orbits in pair.flags():
        points = set(line)
        for delta in orbits:
            size = len(points.intersection(delta))
            if size not in (0, 1, len(delta)):
                return Verdict(False, 'violated',
                               {'u': u, 'delta': delta, 'line': line, 'size': size})
            sizes.add(size)
    return Verdict(True, 'ok', {'sizes': sorted(sizes)})


def is_line_transitive(pair: GroupSpacePair) -> bool:
    """One line's set orbit has all b lines."""
    if not pair.space.lines:
        return True
    if 'line_orbits' in pair._cache:
        return len(pair._cache['line_orbits']) == 1
    return len(set_orbit(pair.group, pair.space.lines[0], record=False)) == pair.space.b
