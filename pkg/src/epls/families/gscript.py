"""
The groups V x| M on V = GF(q)^2, q = p^d odd, where M is the group of all
diagonal and antidiagonal 2x2 matrices of determinant +-1.

The point (a, b) is labeled label(a) + q * label(b).
"""
import logging

import numpy as np

from ..core.errors import ParameterError
from ..gf.field import field_make
from ..perm.group import PermGroup, group_from_generators
from ..perm.permutation import Permutation
from ..safety.validator import ScaleValidator, enforce
from .affine import translation_images

logger = logging.getLogger(__name__)


def build_gscript(p: int, d: int = 1) -> PermGroup:
    """
    Transitive group of order q^2 * 4(q - 1) on q^2 points, q = p^d.

    Generators: translations along both axes by basis elements,
    diag(alpha, alpha^-1), diag(1, -1) and the coordinate swap.

    Raises:
        ParameterError: if p is 2 or not prime
        BoundExceededError: if p^(2d) exceeds Config.GSCRIPT_MAX_POINTS
    """
    if p == 2:
        raise ParameterError("the construction needs an odd characteristic")
    if d < 1:
        raise ParameterError(f"d must be positive, got {d}")
    enforce(ScaleValidator().validate_gscript(p, d))
    ctx = field_make(p, d)
    q = ctx.order
    first = np.arange(q * q, dtype=np.int64) % q
    second = np.arange(q * q, dtype=np.int64) // q

    def point_map(a_images, b_images):
        return Permutation((np.asarray(a_images)[first] + q * np.asarray(b_images)[second]).tolist(),
                           check=False)

    labels = np.arange(q, dtype=np.int64)
    gens = []
    for i in range(d):
        shift = translation_images(ctx, p ** i)
        gens.append(point_map(shift, labels))
        gens.append(point_map(labels, shift))
    alpha = ctx.primitive_label
    alpha_inv = ctx.inv_label(alpha)
    minus_one = ctx.neg_label(1)
    gens.append(point_map([ctx.mul_labels(x, alpha) for x in range(q)],
                          [ctx.mul_labels(x, alpha_inv) for x in range(q)]))
    gens.append(point_map(labels, [ctx.mul_labels(x, minus_one) for x in range(q)]))
    gens.append(Permutation((second + q * first).tolist(), check=False))
    order = q * q * 4 * (q - 1)
    group = group_from_generators(gens, order=order)
    logger.info("G(%d^%d): degree %d, order %d", p, d, q * q, order)
    return group


def gscript_point(p: int, d: int, a: int, b: int) -> int:
    """Label of the point [a, b] given by field labels a and b."""
    return a + (p ** d) * b
