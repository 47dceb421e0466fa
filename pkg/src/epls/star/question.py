"""
Search harness for line-transitive, non-transverse spaces with an extremely
primitive group, and the rank report.

Three families are searched below a point bound:

    affine       orbit unions of {0} u Delta under the extremely primitive
                 e = 1 soluble affine groups
    diffset      the Singer planes PG(2, q) with Z_m x| multipliers
    orbit-union  orbit unions of {0} u Delta under the small explicit
                 primitive groups of the families package

The only known hit bearing on the question is the projective plane of
order 3.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..core.errors import LinearSpaceError, ParameterError
from ..core.report import Verdict
from ..eprim.predicates import is_extremely_primitive, theorem1_predicate
from ..eprim.survey import survey_instances
from ..families.affine import build_affine_group
from ..families.diffset import build_difference_set_space, singer_difference_set
from ..families.orbit_union import primitive_25_1
from ..gf.numtheory import prime_power
from ..linspace.space import LinearSpace, SpaceParams, is_nontrivial, is_regular, parameters, validate
from ..perm.actions import set_orbit
from ..perm.blocks import rank_and_subdegrees
from ..perm.group import PermGroup
from ..safety.validator import ScaleValidator, enforce
from .pairs import GroupSpacePair, is_line_transitive, is_transverse

logger = logging.getLogger(__name__)

ORDER_THREE_PLANE = SpaceParams(v=13, b=13, k=4, r=4)

QUESTION_FAMILIES = ('affine', 'diffset', 'orbit-union')

ORBIT_UNION_GROUPS: Dict[str, Callable[[], PermGroup]] = {
    'primitive-25-1': primitive_25_1,
}


@dataclass(frozen=True)
class QuestionHit:
    family: str
    params: dict
    seeds: Tuple[Tuple[int, ...], ...]
    parameters: SpaceParams
    line_transitive: bool
    transverse: bool
    extremely_primitive: bool

    @property
    def is_order_three_plane(self) -> bool:
        return self.parameters == ORDER_THREE_PLANE

    @property
    def bears_on_question(self) -> bool:
        """Line-transitive, not transverse, with an extremely primitive group."""
        return self.line_transitive and not self.transverse and self.extremely_primitive

    def to_dict(self) -> dict:
        return {
            'family': self.family,
            'params': self.params,
            'seeds': [list(seed) for seed in self.seeds],
            'parameters': self.parameters.to_dict(),
            'line_transitive': self.line_transitive,
            'transverse': self.transverse,
            'extremely_primitive': self.extremely_primitive,
            'bears_on_question': self.bears_on_question,
            'order_three_plane': self.is_order_three_plane,
        }


def _hit(family: str, params: dict, seeds, space: LinearSpace, group: PermGroup,
         ep: bool) -> QuestionHit:
    pair = GroupSpacePair(space, group)
    hit = QuestionHit(family, params, tuple(tuple(s) for s in seeds), parameters(space),
                      is_line_transitive(pair), bool(is_transverse(pair)), ep)
    logger.info("Question hit (%s, %s): %s", family, params, hit.parameters)
    return hit


def _search_group(group: PermGroup, family: str, params: dict,
                  max_orbits: int) -> List[QuestionHit]:
    """Orbit unions of {0} u Delta over up to max_orbits nontrivial suborbits."""
    q = group.degree
    pairs_needed = q * (q - 1) // 2
    candidates = []
    for orb in group.point_stabilizer(0).orbits():
        if orb == (0,):
            continue
        seed = (0,) + orb
        size = len(set_orbit(group, seed, record=False))
        candidates.append((seed, size * len(seed) * (len(seed) - 1) // 2))

    hits = []
    ep: Optional[bool] = None
    for count in range(1, max_orbits + 1):
        for chosen in combinations(candidates, count):
            # pair count before building any lines
            if sum(pairs for _, pairs in chosen) != pairs_needed:
                continue
            seeds = tuple(seed for seed, _ in chosen)
            lines = set()
            for seed in seeds:
                lines.update(set_orbit(group, seed, record=False).members)
            try:
                space = validate(q, lines)
            except LinearSpaceError:
                continue
            if not is_nontrivial(space):
                continue
            if ep is None:
                ep = bool(is_extremely_primitive(group))
            hits.append(_hit(family, params, seeds, space, group, ep))
    return hits


def _affine_hits(max_points: int, max_orbits: int) -> List[QuestionHit]:
    hits = []
    for params in survey_instances(max_points):
        if params.e != 1 or params.t < 2 or not theorem1_predicate(params):
            continue
        hits.extend(_search_group(build_affine_group(params), 'affine',
                                  params.to_dict(), max_orbits))
    return hits


def _singer_hits(max_points: int) -> List[QuestionHit]:
    hits = []
    for q in range(2, max_points + 1):
        if q * q + q + 1 > max_points:
            break
        power = prime_power(q)
        if power is None:
            continue
        m, residues = singer_difference_set(*power)
        space, group = build_difference_set_space(m, residues)
        hits.append(_hit('diffset', {'q': q, 'mod': m, 'set': list(residues)}, [residues],
                         space, group, bool(is_extremely_primitive(group))))
    return hits


def _orbit_union_hits(max_points: int, max_orbits: int) -> List[QuestionHit]:
    hits = []
    for name, build in ORBIT_UNION_GROUPS.items():
        group = build()
        if group.degree <= max_points:
            hits.extend(_search_group(group, 'orbit-union', {'group': name}, max_orbits))
    return hits


def question_search(max_points: int, max_orbits: int = 1,
                    families: Sequence[str] = QUESTION_FAMILIES) -> List[QuestionHit]:
    """
    Collect the linear spaces of the searched families on at most max_points
    points, with their line-transitivity, transversality and extreme
    primitivity.

    Args:
        max_points: point bound, capped like the survey
        max_orbits: largest number of seed orbits combined into one orbit union
        families: any of QUESTION_FAMILIES

    Returns:
        list[QuestionHit]: by family in QUESTION_FAMILIES order, then by size

    Raises:
        ParameterError: on an unknown family
        BoundExceededError: if max_points exceeds the survey cap
    """
    unknown = set(families) - set(QUESTION_FAMILIES)
    if unknown:
        raise ParameterError(f"unknown families {sorted(unknown)}")
    enforce(ScaleValidator().validate_survey(max_points), bound=max_points)
    hits = []
    if 'affine' in families:
        hits.extend(_affine_hits(max_points, max_orbits))
    if 'diffset' in families:
        hits.extend(_singer_hits(max_points))
    if 'orbit-union' in families:
        hits.extend(_orbit_union_hits(max_points, max_orbits))
    relevant = [h for h in hits if h.bears_on_question]
    logger.info("Question search to %d points: %d hits, %d bearing on the question, "
                "%d of those other than the order-3 plane", max_points, len(hits),
                len(relevant), sum(not h.is_order_three_plane for h in relevant))
    return hits


def rank_three_check(group: PermGroup, space: Optional[LinearSpace] = None) -> Verdict:
    """
    Report the rank and flag rank <= 3.

    A rank <= 3 extremely primitive group preserves no regular nontrivial
    space other than an affine space over GF(3). With a space given, the
    witness records whether it has that shape.

    Returns:
        Verdict: holds when the rank is at most 3; witness
                 {'rank', 'subdegrees', 'ag3_shape'}
    """
    subdegrees = rank_and_subdegrees(group)
    rank = len(subdegrees)
    ag3_shape = None
    if space is not None:
        power = prime_power(space.v)
        ag3_shape = (is_regular(space) and is_nontrivial(space)
                     and set(space.line_sizes()) == {3}
                     and power is not None and power[0] == 3)
    reason = 'rank-at-most-3' if rank <= 3 else 'rank-above-3'
    return Verdict(rank <= 3, reason,
                   {'rank': rank, 'subdegrees': list(subdegrees), 'ag3_shape': ag3_shape})
