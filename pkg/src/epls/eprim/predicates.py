"""
The primitivity hierarchy: 3/2-transitivity, extreme primitivity, and the
arithmetic conditions that classify the soluble affine cases.
"""
import logging

from ..core.report import Verdict
from ..families.affine import AffineParams, affine_complements, build_affine_group
from ..gf.numtheory import is_primitive_prime_divisor
from ..perm.actions import induced_action
from ..perm.blocks import is_primitive, nontrivial_block, suborbits
from ..perm.group import PermGroup

logger = logging.getLogger(__name__)


def is_three_halves_transitive(group: PermGroup) -> bool:
    """
    True iff all nontrivial subdegrees are equal and larger than 1.

    Raises:
        IntransitiveError: if the group is not transitive
    """
    sizes = {len(orb) for orb in suborbits(group, 0) if orb != (0,)}
    return len(sizes) == 1 and sizes.pop() > 1


def is_extremely_primitive(group: PermGroup) -> Verdict:
    """
    Test extreme primitivity stage by stage.

    The group must be transitive, not regular and primitive, and the
    stabilizer of 0 must act primitively on each of its nontrivial orbits.
    Orbits of size 1 are skipped.

    Returns:
        Verdict: reason 'ok', 'intransitive', 'regular', 'imprimitive' (witness
                 a block) or 'stabilizer' (witness the orbit on which G_0 is
                 imprimitive)
    """
    if not group.is_transitive():
        return Verdict(False, 'intransitive', group.orbits())
    if group.is_regular():
        return Verdict(False, 'regular', group.order())
    block = nontrivial_block(group)
    if block is not None:
        return Verdict(False, 'imprimitive', block)
    stabilizer = group.point_stabilizer(0)
    for orb in stabilizer.orbits():
        if len(orb) == 1:
            continue
        action = induced_action(stabilizer, orb)
        if not is_primitive(action.group):
            logger.debug("G_0 is imprimitive on an orbit of size %d", len(orb))
            return Verdict(False, 'stabilizer', orb)
    return Verdict(True)


def theorem1_predicate(params: AffineParams) -> bool:
    """t is a primitive prime divisor of p^d - 1, and e = 1 or p^d - 1 = t(p^(d/e) - 1)."""
    params.check()
    p, d, t, e = params.p, params.d, params.t, params.e
    if not is_primitive_prime_divisor(t, p, d):
        return False
    return e == 1 or p ** d - 1 == t * (p ** (d // e) - 1)


def orbit_condition_predicate(params: AffineParams) -> bool:
    """e = 1 or p^d - 1 divides t(p^(d/e) - 1)."""
    params.check()
    p, d, t, e = params.p, params.d, params.t, params.e
    return e == 1 or (t * (p ** (d // e) - 1)) % (p ** d - 1) == 0


def orbit_condition_equivalence(params: AffineParams) -> Verdict:
    """
    The three equivalent orbit conditions, each computed on its own.

    same_orbits: T = C_t and H = T x| C_e have the same orbits on the field;
    equal_sizes: the orbits of H on the nonzero labels all have one size;
    arithmetic: orbit_condition_predicate(params).

    Returns:
        Verdict: holds when the three agree, witness the three flags
    """
    multiplier, complement = affine_complements(params)
    same_orbits = multiplier.orbits() == complement.orbits()
    sizes = {len(orb) for orb in complement.orbits() if orb != (0,)}
    equal_sizes = len(sizes) <= 1
    arithmetic = orbit_condition_predicate(params)
    flags = {'same_orbits': same_orbits, 'equal_sizes': equal_sizes, 'arithmetic': arithmetic}
    if same_orbits == equal_sizes == arithmetic:
        return Verdict(True, 'ok', flags)
    return Verdict(False, 'disagree', flags)


def affine_extremely_primitive(params: AffineParams) -> Verdict:
    """is_extremely_primitive on the constructed affine group."""
    return is_extremely_primitive(build_affine_group(params))

