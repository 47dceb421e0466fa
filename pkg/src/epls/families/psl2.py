"""
PSL2(2^m) on the projective line and on the right cosets of a dihedral
subgroup D_2q, where q = 2^m + 1 is a Fermat prime.
"""
import logging
import random
from typing import List, Optional, Tuple

from sympy import isprime

from ..core.config import Config
from ..core.errors import EplsError, ParameterError, SearchFailedError
from ..gf.field import field_make
from ..perm.group import PermGroup, group_from_generators
from ..perm.permutation import Permutation
from ..safety.validator import ScaleValidator, enforce

logger = logging.getLogger(__name__)


def is_fermat_prime(q: int) -> bool:
    """q = 2^(2^n) + 1 and prime."""
    if q < 3 or not isprime(q):
        return False
    m = (q - 1).bit_length() - 1
    return q - 1 == 1 << m and m & (m - 1) == 0


def projective_line_group(m: int) -> PermGroup:
    """
    PSL2(2^m) acting on the projective line over GF(2^m).

    Field labels are the points 0..2^m-1 and infinity is the point 2^m.
    Generators: x -> x + 1, x -> alpha x and x -> 1/x.
    """
    ctx = field_make(2, m)
    n = ctx.order
    infinity = n
    shift = [x ^ 1 for x in range(n)] + [infinity]
    scale = [ctx.mul_labels(x, ctx.primitive_label) for x in range(n)] + [infinity]
    invert = [infinity] + [ctx.inv_label(x) for x in range(1, n)] + [0]
    gens = [Permutation(images, check=False) for images in (shift, scale, invert)]
    return group_from_generators(gens, order=n * (n * n - 1))


def _random_involution(group: PermGroup, rng: random.Random) -> Optional[Permutation]:
    x = group.random_element(rng)
    o = x.order()
    if o % 2:
        return None
    return x ** (o // 2)


def find_dihedral_pair(group: PermGroup, q: int, rng: random.Random,
                       tries: Optional[int] = None) -> Tuple[Permutation, Permutation]:
    """
    An element g of order q and an involution s with g^s = g^-1.

    Products of two random involutions s, s' generate a dihedral group in
    which s inverts g = s s'; the search stops at the first g of order q.

    Raises:
        SearchFailedError: after the given number of tries
    """
    tries = Config.SUBGROUP_SEARCH_TRIES if tries is None else tries
    for attempt in range(tries):
        s = _random_involution(group, rng)
        s2 = _random_involution(group, rng)
        if s is None or s2 is None:
            continue
        g = s * s2
        if g.order() != q:
            continue
        if g.conjugate(s) != g.inverse():
            continue
        logger.debug("Dihedral pair found after %d tries", attempt + 1)
        return g, s
    raise SearchFailedError(f"no element of order {q} with an inverting involution "
                            f"in {tries} tries")


def _coset_key(x: Permutation, triples: List[Tuple[int, int, int]]) -> Tuple[int, int, int]:
    # elements of PSL2 over GF(2^m) are determined by the images of 0, 1, 2
    return min((x[a], x[b], x[c]) for a, b, c in triples)


def build_psl2_dihedral_coset(q: int, seed: Optional[int] = None) -> PermGroup:
    """
    PSL2(q-1) acting on the (q-1)(q-2)/2 right cosets of D_2q.

    The coset of D itself is point 0, the others are numbered in the order
    a breadth-first search over the generators meets them. Each coset Dx is
    keyed by the least image triple of 0, 1, 2 over its 2q elements.

    Raises:
        ParameterError: if q is not a Fermat prime of at least 5
        BoundExceededError: if the coset action exceeds Config.PSL2_MAX_DEGREE
        SearchFailedError: if the seeded search for D_2q gives up
    """
    if not is_fermat_prime(q) or q < 5:
        raise ParameterError(f"q = {q} is not a Fermat prime of at least 5")
    enforce(ScaleValidator().validate_psl2(q))
    m = (q - 1).bit_length() - 1
    line = projective_line_group(m)
    rng = random.Random(Config.SEED if seed is None else seed)
    g, s = find_dihedral_pair(line, q, rng)
    dihedral = group_from_generators([g, s])
    if dihedral.order() != 2 * q:
        raise EplsError(f"<g, s> has order {dihedral.order()}, expected {2 * q}")
    elements = []
    h = Permutation.identity(line.degree)
    for _ in range(q):
        elements.extend([h, h * s])
        h = h * g
    triples = [(d[0], d[1], d[2]) for d in elements]

    reps = [Permutation.identity(line.degree)]
    index = {_coset_key(reps[0], triples): 0}
    images = [dict() for _ in line.generators]
    for i, x in enumerate(reps):
        for j, y in enumerate(line.generators):
            z = x * y
            key = _coset_key(z, triples)
            if key not in index:
                index[key] = len(reps)
                reps.append(z)
            images[j][i] = index[key]
    degree = len(reps)
    if degree != (q - 1) * (q - 2) // 2:
        raise EplsError(f"found {degree} cosets, expected {(q - 1) * (q - 2) // 2}")
    gens = [Permutation([table[i] for i in range(degree)]) for table in images]
    group = group_from_generators(gens, order=line.order())
    logger.info("PSL2(%d) on cosets of D_%d: degree %d, order %d",
                q - 1, 2 * q, degree, line.order())
    return group
