"""
Refinements of a line-transitive linear space from an inner space on one
line, and the extraction that inverts the construction.

Inner spaces live on 0..k-1: the i-th smallest point of the line is i, the
relabeling of perm.actions.induced_action.
"""
import logging
from typing import Optional, Sequence, Tuple

from ..core.errors import LinearSpaceError, NotInvariantError, PreconditionError
from ..linspace.space import LinearSpace, group_preserves, is_refinement, validate
from ..perm.actions import InducedAction, canonical_set, induced_action, set_orbits
from ..perm.actions import setwise_stabilizer_via_orbit
from ..safety.validator import ScaleValidator, enforce
from ..star.pairs import GroupSpacePair

logger = logging.getLogger(__name__)


def refinement_incidences(b: int, inner: LinearSpace) -> int:
    """Point-line incidences of the refinement: every line carries a copy of inner."""
    return b * sum(len(line) for line in inner.lines)


def check_refinement_scale(b: int, inner: LinearSpace, max_incidences: Optional[int] = None):
    """
    Raises:
        BoundExceededError: if the refinement would exceed the incidence bound
    """
    incidences = refinement_incidences(b, inner)
    enforce(ScaleValidator().validate_incidences(incidences, max_incidences), bound=incidences)


def line_action(pair: GroupSpacePair, ell: Sequence[int]) -> Tuple[Tuple[int, ...], InducedAction]:
    """
    The line as a sorted tuple and G_l acting on it.

    Raises:
        PreconditionError: 'not-a-line' or 'not-line-transitive'
    """
    line = canonical_set(ell)
    if line not in pair.space:
        raise PreconditionError('not-a-line', f"{line} is not a line of the space")
    stabilizer, orbit_size = setwise_stabilizer_via_orbit(pair.group, line)
    if orbit_size != pair.space.b:
        raise PreconditionError(
            'not-line-transitive', f"the line orbit has {orbit_size} of {pair.space.b} lines")
    return line, induced_action(stabilizer, line)


def construct_refinement(pair: GroupSpacePair, ell: Sequence[int], inner: LinearSpace,
                         limit: Optional[int] = None,
                         max_incidences: Optional[int] = None) -> LinearSpace:
    """
    The set orbits under G of the inner lines placed on ell.

    Args:
        pair: a line-transitive pair
        ell: a line of pair.space
        inner: a linear space on 0..|ell|-1 preserved by G_l^l
        limit: set-orbit bound
        max_incidences: incidence bound, Config.MAX_INCIDENCES when None

    Returns:
        LinearSpace: a refinement of pair.space preserved by pair.group

    Raises:
        PreconditionError: 'not-a-line', 'not-line-transitive', 'inner-size',
            'inner-invalid' or 'inner-not-invariant'
        BoundExceededError: if the incidence estimate or a set orbit is too large
    """
    line, action = line_action(pair, ell)
    if inner.v != len(line):
        raise PreconditionError('inner-size',
                                f"inner space has {inner.v} points, the line {len(line)}")
    try:
        validate(inner.v, inner.lines)
    except LinearSpaceError as exc:
        raise PreconditionError('inner-invalid', str(exc))
    if not group_preserves(inner, action.group):
        raise PreconditionError('inner-not-invariant',
                                "the group induced on the line does not preserve the inner space")
    check_refinement_scale(pair.space.b, inner, max_incidences)

    seeds = [action.to_global(t) for t in inner.lines]
    orbits = set_orbits(pair.group, seeds, limit=limit)
    refined = validate(pair.space.v, [t for orbit in orbits for t in orbit.members])
    if not is_refinement(refined, pair.space):
        raise LinearSpaceError("constructed lines do not refine the space")
    if not group_preserves(refined, pair.group):
        raise NotInvariantError("the group does not preserve the constructed space")
    logger.info("Refinement: %d lines in %d orbits, sizes %s",
                refined.b, len(orbits), dict(refined.line_sizes()))
    return refined


def extract_inner_space(refined: LinearSpace, pair: GroupSpacePair,
                        ell: Sequence[int]) -> LinearSpace:
    """
    The lines of refined inside ell, relabeled onto 0..|ell|-1.

    Raises:
        PreconditionError: 'degree-mismatch', 'not-a-refinement', 'not-invariant',
            'not-a-line' or 'not-line-transitive'
    """
    if refined.v != pair.space.v:
        raise PreconditionError('degree-mismatch',
                                f"{refined.v} points against {pair.space.v}")
    if not is_refinement(refined, pair.space):
        raise PreconditionError('not-a-refinement', "the space does not refine the pair's space")
    if not group_preserves(refined, pair.group):
        raise PreconditionError('not-invariant', "the group does not preserve the refined space")
    line, action = line_action(pair, ell)
    points = set(line)
    inner = validate(len(line), [action.to_local(t) for t in refined.lines
                                 if points.issuperset(t)])
    logger.debug("Extracted %d inner lines from %s", inner.b, line)
    return inner


def roundtrip_check(refined: LinearSpace, pair: GroupSpacePair, ell: Sequence[int]) -> bool:
    """Rebuilding from the extracted inner space gives back refined."""
    rebuilt = construct_refinement(pair, ell, extract_inner_space(refined, pair, ell))
    return rebuilt == refined
