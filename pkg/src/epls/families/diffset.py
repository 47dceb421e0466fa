"""
Cyclic linear spaces from perfect difference sets.
"""
import logging
from math import gcd
from typing import Iterable, List, Tuple

from ..core.errors import ParameterError
from ..gf.field import field_make
from ..linspace.space import LinearSpace, validate
from ..perm.group import PermGroup, group_from_generators
from ..perm.permutation import Permutation
from ..safety.validator import ScaleValidator, enforce

logger = logging.getLogger(__name__)


def check_difference_set(m: int, ds: Iterable[int]) -> Tuple[int, ...]:
    """
    Reduce ds mod m and check that every nonzero residue is exactly one difference.

    Returns:
        tuple: the sorted residues

    Raises:
        ParameterError: if ds is not a perfect difference set mod m
    """
    if m < 3:
        raise ParameterError(f"modulus must be at least 3, got {m}")
    residues = sorted({x % m for x in ds})
    k = len(residues)
    if k * (k - 1) != m - 1:
        raise ParameterError(f"{k} residues give {k * (k - 1)} differences, need {m - 1}")
    seen = set()
    for a in residues:
        for b in residues:
            if a == b:
                continue
            diff = (a - b) % m
            if diff in seen:
                raise ParameterError(f"difference {diff} arises more than once in {residues}")
            seen.add(diff)
    return tuple(residues)


def multipliers(m: int, ds: Iterable[int]) -> List[int]:
    """Units mu mod m for which mu * ds is a translate of ds, in increasing order."""
    residues = sorted({x % m for x in ds})
    translates = {tuple(sorted((x + s) % m for x in residues)) for s in range(m)}
    return [mu for mu in range(1, m) if gcd(mu, m) == 1
            and tuple(sorted(mu * x % m for x in residues)) in translates]


def singer_difference_set(p: int, d: int) -> Tuple[int, Tuple[int, ...]]:
    """
    The Singer difference set of PG(2, q), q = p^d.

    With alpha primitive in GF(q^3), the points of the plane are alpha^i for
    i mod q^2 + q + 1; the exponents whose power has trace zero over GF(q)
    form the set.

    Returns:
        tuple: (modulus, sorted residues)

    Raises:
        BoundExceededError: if the modulus exceeds Config.DIFFERENCE_SET_MAX_MODULUS
    """
    q = p ** d
    m = q * q + q + 1
    enforce(ScaleValidator().validate_difference_set(m))
    ctx = field_make(p, 3 * d)
    residues = []
    for i in range(m):
        x = ctx.power_of_primitive(i)
        trace = ctx.add_labels(ctx.add_labels(x, ctx.frobenius_label(x, d)),
                               ctx.frobenius_label(x, 2 * d))
        if trace == 0:
            residues.append(i)
    logger.debug("Singer set for q = %d: %s", q, residues)
    return m, check_difference_set(m, residues)


def build_difference_set_space(m: int, ds: Iterable[int]) -> Tuple[LinearSpace, PermGroup]:
    """
    Translates of a perfect difference set, with Z_m x| M acting on them.

    M is the group of multipliers; the group is generated by x -> x + 1 and
    x -> mu x for every multiplier mu other than 1.

    Raises:
        ParameterError: if ds is not a perfect difference set mod m
        BoundExceededError: if m exceeds Config.DIFFERENCE_SET_MAX_MODULUS
    """
    enforce(ScaleValidator().validate_difference_set(m))
    residues = check_difference_set(m, ds)
    space = validate(m, [[(x + s) % m for x in residues] for s in range(m)])
    found = multipliers(m, residues)
    gens = [Permutation([(x + 1) % m for x in range(m)], check=False)]
    gens.extend(Permutation([mu * x % m for x in range(m)], check=False)
                for mu in found if mu != 1)
    group = group_from_generators(gens, order=m * len(found))
    logger.info("Difference set %s mod %d: multipliers %s, group order %d",
                residues, m, found, group.order())
    return space, group
