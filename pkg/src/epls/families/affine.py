"""
Soluble affine groups V x| (C_t x| C_e) inside AGammaL(1, p^d).

Points are field labels 0..p^d-1. The complement H = T x| E is generated by
multiplication by alpha^((p^d-1)/t), which generates T = C_t, and by the field
automorphism x -> x^(p^(d/e)), which generates E = C_e.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from sympy import isprime

from ..core.errors import ParameterError
from ..gf.field import FieldCtx, field_make
from ..perm.group import PermGroup, group_from_generators
from ..perm.permutation import Permutation
from ..safety.validator import ScaleValidator, enforce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineParams:
    """Parameters (p, d, t, e) of a soluble affine group of degree p^d."""
    p: int
    d: int
    t: int
    e: int

    @property
    def q(self) -> int:
        return self.p ** self.d

    @property
    def order(self) -> int:
        return self.q * self.t * self.e

    def check(self):
        """
        Raises:
            ParameterError: unless p is prime, t divides p^d - 1 and e divides d
        """
        if not isprime(self.p):
            raise ParameterError(f"p = {self.p} is not prime")
        if self.d < 1 or self.t < 1 or self.e < 1:
            raise ParameterError(f"d, t and e must be positive in {self}")
        if (self.q - 1) % self.t:
            raise ParameterError(f"t = {self.t} does not divide {self.q - 1}")
        if self.d % self.e:
            raise ParameterError(f"e = {self.e} does not divide d = {self.d}")

    def to_dict(self) -> dict:
        return {'p': self.p, 'd': self.d, 't': self.t, 'e': self.e}

    def __str__(self) -> str:
        return f"({self.p},{self.d},{self.t},{self.e})"


def translation_images(ctx: FieldCtx, a: int) -> np.ndarray:
    """Images of x -> x + a on all labels, digit by digit."""
    labels = np.arange(ctx.order, dtype=np.int64)
    if ctx.p == 2:
        return labels ^ a
    result = np.zeros_like(labels)
    place = 1
    for c in ctx.coeffs_of(a):
        digit = (labels // place) % ctx.p
        result += ((digit + c) % ctx.p) * place
        place *= ctx.p
    return result


def translation(ctx: FieldCtx, a: int) -> Permutation:
    return Permutation(translation_images(ctx, a).tolist(), check=False)


def multiplication(ctx: FieldCtx, a: int) -> Permutation:
    """x -> a x for a nonzero label a."""
    if a == 0:
        raise ParameterError("multiplication by zero is not a permutation")
    return Permutation([ctx.mul_labels(x, a) for x in range(ctx.order)], check=False)


def frobenius(ctx: FieldCtx, j: int) -> Permutation:
    """x -> x^(p^j)."""
    return Permutation([ctx.frobenius_label(x, j) for x in range(ctx.order)], check=False)


def _complement_generators(params: AffineParams, ctx: FieldCtx) -> Tuple[List[Permutation],
                                                                          List[Permutation]]:
    mult = []
    if params.t > 1:
        mult.append(multiplication(ctx, ctx.power_of_primitive((params.q - 1) // params.t)))
    frob = []
    if params.e > 1:
        frob.append(frobenius(ctx, params.d // params.e))
    return mult, frob


def build_affine_group(params: AffineParams) -> PermGroup:
    """
    The group V x| (C_t x| C_e) on the p^d field labels.

    Generators are the translations by the basis elements p^i, multiplication
    by alpha^((p^d-1)/t) and the Frobenius power x -> x^(p^(d/e)); the identity
    parts are left out.

    Raises:
        ParameterError: if the divisibility conditions fail
        BoundExceededError: if p^d exceeds Config.AFFINE_MAX_POINTS
    """
    params.check()
    enforce(ScaleValidator().validate_affine(params.p, params.d))
    ctx = field_make(params.p, params.d)
    gens = [translation(ctx, params.p ** i) for i in range(params.d)]
    mult, frob = _complement_generators(params, ctx)
    group = group_from_generators(gens + mult + frob, order=params.order)
    logger.info("Affine group %s: degree %d, order %d", params, params.q, params.order)
    return group


def affine_complements(params: AffineParams) -> Tuple[PermGroup, PermGroup]:
    """
    The subgroups T = C_t and H = T x| E fixing the label 0.

    Returns:
        tuple: (T, H) as groups on the p^d field labels
    """
    params.check()
    enforce(ScaleValidator().validate_affine(params.p, params.d))
    ctx = field_make(params.p, params.d)
    ident = [Permutation.identity(params.q)]
    mult, frob = _complement_generators(params, ctx)
    multiplier = group_from_generators(mult or ident, order=params.t)
    complement = group_from_generators(mult + frob or ident, order=params.t * params.e)
    return multiplier, complement
