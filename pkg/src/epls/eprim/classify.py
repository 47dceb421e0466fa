"""
Which of the three cases a regular nontrivial linear space with an extremely
primitive automorphism group falls into.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from ..core.errors import NotInvariantError, ParameterError
from ..gf.numtheory import prime_power
from ..linspace.space import LinearSpace, group_preserves, is_nontrivial, is_refinement, is_regular
from ..perm.group import PermGroup
from .predicates import is_extremely_primitive

logger = logging.getLogger(__name__)

PSL2_REFINEMENT = 'psl2-refinement'
AFFINE_REFINEMENT = 'affine-e>=2-refinement'
AFFINE_E1 = 'affine-e=1'
UNCLASSIFIED = 'unclassified'


@dataclass(frozen=True)
class Classification:
    """
    Attributes:
        case: one of the case labels above
        two_point_order: |G_uv| for u = 0 and v the least point of a nontrivial suborbit
        refines_ls: whether the space refines LS(G); None for the e = 1 case
    """
    case: str
    two_point_order: int
    refines_ls: Optional[bool]

    def to_dict(self) -> dict:
        return {'case': self.case, 'two_point_order': self.two_point_order,
                'refines_ls': self.refines_ls}


def classify_pair(space: LinearSpace, group: PermGroup) -> Classification:
    """
    Label the pair by case and check the refinement it promises.

    Prime-power degree means the affine case, with e = |G_uv|; otherwise the
    degree must be (q-1)(q-2)/2 with all nontrivial subdegrees q and |G_uv| = 2.

    Raises:
        ParameterError: if the space is not regular and nontrivial or the
            group is not extremely primitive
        NotInvariantError: if the group does not preserve the space
    """
    from ..star.ls import build_ls

    if not is_regular(space) or not is_nontrivial(space):
        raise ParameterError("classification needs a regular nontrivial linear space")
    if not group_preserves(space, group):
        raise NotInvariantError("the group does not preserve the space")
    verdict = is_extremely_primitive(group)
    if not verdict:
        raise ParameterError(f"the group is not extremely primitive ({verdict.reason})")
    stabilizer = group.point_stabilizer(0)
    nontrivial = [orb for orb in stabilizer.orbits() if len(orb) > 1]
    two_point = group.pointwise_stabilizer([0, nontrivial[0][0]]).order()

    if prime_power(group.degree) is not None:
        if two_point == 1:
            return Classification(AFFINE_E1, two_point, None)
        case = AFFINE_REFINEMENT
    else:
        q = len(nontrivial[0])
        same = all(len(orb) == q for orb in nontrivial)
        if not same or two_point != 2 or group.degree != (q - 1) * (q - 2) // 2:
            return Classification(UNCLASSIFIED, two_point, None)
        case = PSL2_REFINEMENT
    refines = is_refinement(space, build_ls(group))
    logger.info("Classified as %s, refinement of LS(G): %s", case, refines)
    return Classification(case, two_point, refines)
