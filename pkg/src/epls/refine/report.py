"""
Summary of a refinement against the pair it refines.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional

from ..linspace.space import LinearSpace, SpaceParams, group_preserves, is_refinement, parameters
from ..star.pairs import GroupSpacePair, is_transverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RefinementReport:
    """
    Attributes:
        sizes: line size -> number of lines
        transverse_inherited: whether (R, G) is transverse; None when the
            refined pair is not transverse to begin with
    """
    parameters: SpaceParams
    sizes: Dict[int, int]
    line_transitive: bool
    line_orbits: int
    refines: bool
    preserved: bool
    transverse_inherited: Optional[bool]

    def to_dict(self) -> dict:
        return {
            'parameters': self.parameters.to_dict(),
            'sizes': {str(k): n for k, n in sorted(self.sizes.items())},
            'line_transitive': self.line_transitive,
            'line_orbits': self.line_orbits,
            'refines': self.refines,
            'preserved': self.preserved,
            'transverse_inherited': self.transverse_inherited,
        }


def refinement_report(refined: LinearSpace, pair: GroupSpacePair) -> RefinementReport:
    """Line sizes, line orbits and the inherited properties of (refined, G)."""
    preserved = group_preserves(refined, pair.group)
    orbits = None
    inherited = None
    if preserved:
        refined_pair = GroupSpacePair(refined, pair.group)
        orbits = len(refined_pair.line_orbits())
        if is_transverse(pair):
            inherited = bool(is_transverse(refined_pair))
    report = RefinementReport(
        parameters=parameters(refined),
        sizes=dict(refined.line_sizes()),
        line_transitive=orbits == 1,
        line_orbits=orbits if orbits is not None else 0,
        refines=is_refinement(refined, pair.space),
        preserved=preserved,
        transverse_inherited=inherited,
    )
    logger.info("Refinement report: %s, %d line orbits", report.parameters, report.line_orbits)
    return report
