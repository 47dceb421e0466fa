"""
Scale validation for constructions, searches and refinements.
"""
import logging
from typing import Optional, Tuple

from ..core.config import Config
from ..core.errors import BoundExceededError

logger = logging.getLogger(__name__)

STRETCH = "instance is stretch-scale"


class ScaleValidator:
    """Validates instance sizes before heavy work."""

    def validate_points(self, v: int, limit: int) -> bool:
        """
        Validate a point count against a bound.

        Args:
            v: Number of points
            limit: Largest accepted point count

        Returns:
            bool: True if 1 <= v <= limit
        """
        return 1 <= v <= limit

    def validate_field(self, p: int, d: int) -> Tuple[bool, str]:
        if p ** d > Config.FIELD_MAX_ORDER:
            return False, f"GF({p}^{d}) exceeds the field bound {Config.FIELD_MAX_ORDER}; {STRETCH}"
        return True, "Field size validated successfully"

    def validate_affine(self, p: int, d: int) -> Tuple[bool, str]:
        if not self.validate_points(p ** d, Config.AFFINE_MAX_POINTS):
            return False, f"{p}^{d} points exceed {Config.AFFINE_MAX_POINTS}; {STRETCH}"
        return True, "Affine group size validated successfully"

    def validate_gscript(self, p: int, d: int) -> Tuple[bool, str]:
        v = p ** (2 * d)
        if not self.validate_points(v, Config.GSCRIPT_MAX_POINTS):
            return False, f"{v} points exceed {Config.GSCRIPT_MAX_POINTS}; {STRETCH}"
        return True, "Group size validated successfully"

    def validate_psl2(self, q: int) -> Tuple[bool, str]:
        """
        Validate the Fermat prime q for the dihedral coset action.

        Returns:
            tuple: (ok, message); the coset action has (q-1)(q-2)/2 points
        """
        if q > Config.PSL2_MAX_Q:
            return False, f"q = {q} exceeds {Config.PSL2_MAX_Q}; {STRETCH}"
        degree = (q - 1) * (q - 2) // 2
        if degree > Config.PSL2_MAX_DEGREE:
            return False, (f"coset action on {degree} points exceeds "
                           f"{Config.PSL2_MAX_DEGREE}; {STRETCH}")
        return True, "Coset action size validated successfully"

    def validate_difference_set(self, m: int) -> Tuple[bool, str]:
        if not self.validate_points(m, Config.DIFFERENCE_SET_MAX_MODULUS):
            return False, f"modulus {m} exceeds {Config.DIFFERENCE_SET_MAX_MODULUS}"
        return True, "Modulus validated successfully"

    def validate_geometry(self, q: int, n: int,
                          max_incidences: Optional[int] = None) -> Tuple[bool, str]:
        v = q ** n
        if not self.validate_points(v, Config.AG_MAX_POINTS):
            return False, f"{v} points exceed {Config.AG_MAX_POINTS}; {STRETCH}"
        # every line has q points, v(v-1)/(q(q-1)) lines
        incidences = v * (v - 1) // (q - 1) if q > 1 else 0
        return self.validate_incidences(incidences, max_incidences)

    def validate_survey(self, max_points: int, force: bool = False) -> Tuple[bool, str]:
        if max_points < 2:
            return False, f"survey needs at least 2 points, got {max_points}"
        if max_points > Config.SURVEY_MAX_POINTS and not force:
            return False, (f"survey to {max_points} points exceeds the cap "
                           f"{Config.SURVEY_MAX_POINTS}; pass --force to run it")
        return True, "Survey bound validated successfully"

    def validate_incidences(self, incidences: int,
                            max_incidences: Optional[int] = None) -> Tuple[bool, str]:
        """
        Validate an estimated incidence count against the memory bound.

        Args:
            incidences: Estimated total number of point-line incidences
            max_incidences: Bound, Config.MAX_INCIDENCES when None

        Returns:
            tuple: (ok, message)
        """
        bound = Config.MAX_INCIDENCES if max_incidences is None else max_incidences
        if incidences > bound:
            return False, f"{incidences} incidences exceed {bound}; {STRETCH}"
        return True, "Incidence estimate validated successfully"

    def validate_group_order(self, order: int, limit: int) -> Tuple[bool, str]:
        if order > limit:
            return False, f"group order {order} exceeds {limit}; {STRETCH}"
        return True, "Group order validated successfully"


def enforce(result: Tuple[bool, str], bound: Optional[int] = None):
    """
    Raise on a failed validation.

    Raises:
        BoundExceededError: carrying the validator's message
    """
    ok, message = result
    if not ok:
        logger.warning("Rejected: %s", message)
        raise BoundExceededError(message, bound=bound)
