"""
Structure of the stabilizer of a line Lambda_uv of LS(G).
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..perm.actions import induced_action, normalizer, setwise_stabilizer_via_orbit
from ..perm.group import PermGroup
from .ls import lambda_line

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LineStabilizerReport:
    """
    Orders and checks for the line l = Lambda_uv.

    pointwise_is_two_point: G_[l] = G_uv as groups.
    stabilizer_is_normalizer: G_l = N_G(G_uv) as groups.
    quotient_order_matches: |G_l^l| = |N_G(G_uv)| / |G_uv|.
    """
    line: Tuple[int, ...]
    two_point_order: int
    pointwise_order: int
    stabilizer_order: int
    normalizer_order: int
    induced_order: int
    kernel_order: int
    line_orbit_size: int
    pointwise_is_two_point: bool
    stabilizer_is_normalizer: bool
    quotient_order_matches: bool
    induced_semiregular: bool
    induced_regular: bool
    transverse: Optional[bool] = None

    @property
    def holds(self) -> bool:
        """All checks pass; semiregularity is required only for transverse pairs."""
        semiregular_ok = self.induced_semiregular or not self.transverse
        return (self.pointwise_is_two_point and self.stabilizer_is_normalizer
                and self.quotient_order_matches and semiregular_ok)

    def to_dict(self) -> dict:
        return {
            'line': list(self.line),
            'two_point_order': self.two_point_order,
            'pointwise_order': self.pointwise_order,
            'stabilizer_order': self.stabilizer_order,
            'normalizer_order': self.normalizer_order,
            'induced_order': self.induced_order,
            'kernel_order': self.kernel_order,
            'line_orbit_size': self.line_orbit_size,
            'pointwise_is_two_point': self.pointwise_is_two_point,
            'stabilizer_is_normalizer': self.stabilizer_is_normalizer,
            'quotient_order_matches': self.quotient_order_matches,
            'induced_semiregular': self.induced_semiregular,
            'induced_regular': self.induced_regular,
            'transverse': self.transverse,
            'holds': self.holds,
        }


def line_stabilizer_report(group: PermGroup, u: int, v: int,
                           transverse: Optional[bool] = None,
                           limit: Optional[int] = None) -> LineStabilizerReport:
    """
    Compute G_[l], G_l, N_G(G_uv) and G_l^l for l = Lambda_uv.

    G_l comes from the Schreier generators of the set orbit of l, the
    normalizer from bounded enumeration of G.

    Args:
        transverse: whether the pair (LS(G), G) or the caller's pair is transverse
        limit: normalizer enumeration bound, Config.NORMALIZER_LIMIT when None

    Raises:
        BoundExceededError: if |G| exceeds the normalizer bound
    """
    two_point = group.pointwise_stabilizer([u, v])
    line = lambda_line(group, u, v)
    pointwise = group.pointwise_stabilizer(line)
    stabilizer, orbit_size = setwise_stabilizer_via_orbit(group, line)
    norm = normalizer(group, two_point, limit=limit)
    induced = induced_action(stabilizer, line)
    report = LineStabilizerReport(
        line=line,
        two_point_order=two_point.order(),
        pointwise_order=pointwise.order(),
        stabilizer_order=stabilizer.order(),
        normalizer_order=norm.order(),
        induced_order=induced.group.order(),
        kernel_order=induced.kernel_order,
        line_orbit_size=orbit_size,
        pointwise_is_two_point=pointwise.same_group(two_point),
        stabilizer_is_normalizer=stabilizer.same_group(norm),
        quotient_order_matches=induced.group.order() * two_point.order() == norm.order(),
        induced_semiregular=induced.group.is_semiregular(),
        induced_regular=induced.group.is_regular(),
        transverse=transverse,
    )
    logger.info("Line %s: |G_uv|=%d, |G_l|=%d, |G_l^l|=%d",
                line, report.two_point_order, report.stabilizer_order, report.induced_order)
    return report
