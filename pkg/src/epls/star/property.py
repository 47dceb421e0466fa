"""
Property (*): for all points u != w and v, G_uv <= G_w implies G_uw <= G_v.

G_uv <= G_w says that w is fixed by G_uv, so both sides are statements about
fixed-point sets of two-point stabilizers.
"""
import logging
from typing import Dict, FrozenSet, Tuple

from ..core.errors import IntransitiveError
from ..core.report import Verdict
from ..perm.group import PermGroup
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)


def _require_transitive(group: PermGroup):
    if not group.is_transitive():
        raise IntransitiveError("Property (*) is tested on transitive groups")


def has_property_star(group: PermGroup) -> Verdict:
    """
    Scan the triples (0, v, w), v over G_0-orbit representatives.

    Transitivity moves u to 0 and G_0 moves v to its representative. For w
    fixed by G_0v, write w = r^h with r a representative and h in G_0; then
    Fix(G_0w) = Fix(G_0r)^h and the check is v^(h^-1) in Fix(G_0r).

    Returns:
        Verdict: witness the violating triple (u, v, w)

    Raises:
        IntransitiveError: if the group is not transitive
    """
    _require_transitive(group)
    stabilizer = group.point_stabilizer(0)
    fixed: Dict[int, FrozenSet[int]] = {}
    carrier: Dict[int, Tuple[int, Permutation]] = {}
    for orb in stabilizer.orbits():
        if orb == (0,):
            continue
        r = orb[0]
        fixed[r] = frozenset(group.pointwise_stabilizer([0, r]).fixed_points())
        for w, h in stabilizer.orbit_transversal(r).items():
            carrier[w] = (r, h)
    for v in fixed:
        for w in sorted(fixed[v]):
            if w == 0:
                continue
            r, h = carrier[w]
            if h.inverse()[v] not in fixed[r]:
                logger.debug("Property (*) fails at (0, %d, %d)", v, w)
                return Verdict(False, 'violated', (0, v, w))
    return Verdict(True)


def has_property_star_naive(group: PermGroup) -> Verdict:
    """All triples, every fixed-point set computed directly. For small degrees."""
    _require_transitive(group)
    n = group.degree
    cache: Dict[Tuple[int, int], FrozenSet[int]] = {}

    def fix(a, b):
        key = (min(a, b), max(a, b))
        if key not in cache:
            cache[key] = frozenset(group.pointwise_stabilizer(key).fixed_points())
        return cache[key]

    for u in range(n):
        for v in range(n):
            if v == u:
                continue
            for w in sorted(fix(u, v)):
                if w != u and v not in fix(u, w):
                    return Verdict(False, 'violated', (u, v, w))
    return Verdict(True)
