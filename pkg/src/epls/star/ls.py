"""
The linear space LS(G) whose lines are the fixed-point sets of two-point stabilizers.
"""
import logging
from typing import Optional, Tuple

from ..core.errors import ParameterError, PropertyStarError
from ..linspace.space import LinearSpace, validate
from ..perm.actions import set_orbits
from ..perm.group import PermGroup
from .property import has_property_star

logger = logging.getLogger(__name__)


def lambda_line(group: PermGroup, u: int, v: int) -> Tuple[int, ...]:
    """Points fixed by G_uv, sorted."""
    if u == v:
        raise ParameterError("a line is determined by two distinct points")
    return group.pointwise_stabilizer([u, v]).fixed_points()


def build_ls(group: PermGroup, limit: Optional[int] = None) -> LinearSpace:
    """
    LS(G) for a transitive group with Property (*).

    The lines through 0 are the sets Lambda_0v, one per G_0-orbit up to
    G_0; every line is a G-image of one of them.

    Raises:
        PropertyStarError: with the violating triple if Property (*) fails
        IntransitiveError: if the group is not transitive
    """
    verdict = has_property_star(group)
    if not verdict:
        raise PropertyStarError(f"Property (*) fails at {verdict.witness}", triple=verdict.witness)
    seeds = [lambda_line(group, 0, orb[0])
             for orb in group.point_stabilizer(0).orbits() if orb != (0,)]
    lines = [line for orbit in set_orbits(group, seeds, limit=limit) for line in orbit.members]
    space = validate(group.degree, lines)
    logger.info("LS(G): v=%d, b=%d, line sizes %s", space.v, space.b, dict(space.line_sizes()))
    return space
