"""
The two refinements worked out in full: an affine plane of order 4 on a line
of LS(2,8,17,2), and two cosets plus cross pairs on a line of the 120-point
space of PSL2(16).
"""
from typing import Tuple

from ..families.affine import AffineParams, build_affine_group
from ..families.geometry import build_affine_geometry_lines
from ..families.orbit_union import coset_crosspairs_space
from ..families.psl2 import build_psl2_dihedral_coset
from ..linspace.space import LinearSpace
from ..star.ls import build_ls, lambda_line
from ..star.pairs import GroupSpacePair
from .construction import line_action

Preset = Tuple[GroupSpacePair, Tuple[int, ...], LinearSpace]

AG_PLANE_PARAMS = AffineParams(2, 8, 17, 2)


def ag_plane_preset() -> Preset:
    """
    (LS(2,8,17,2), G), the GF(16) line through 0 and 1, and AG(2,4) on it.

    The sorted relabeling of an additive subgroup is additive, so the
    translations on the line act on 0..15 by XOR and preserve AG(2,4) with
    points a + 4b.
    """
    group = build_affine_group(AG_PLANE_PARAMS)
    pair = GroupSpacePair(build_ls(group), group)
    return pair, lambda_line(group, 0, 1), build_affine_geometry_lines(2, 2, 2)


def crosspairs_preset(q: int = 17) -> Preset:
    """The PSL2 space on (q-1)(q-2)/2 points and the coset cross pairs on a line."""
    group = build_psl2_dihedral_coset(q)
    pair = GroupSpacePair(build_ls(group), group)
    v = group.point_stabilizer(0).orbits()[1][0]
    line, action = line_action(pair, lambda_line(group, 0, v))
    return pair, line, coset_crosspairs_space(action.group)


PRESETS = {
    'ag-plane': ag_plane_preset,
    'crosspairs': crosspairs_preset,
}
