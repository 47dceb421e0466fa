"""
Arithmetic in GF(p^d) in polynomial basis.

An element is the residue of a polynomial c_0 + c_1 x + ... + c_{d-1} x^{d-1}
modulo a monic irreducible polynomial of degree d over GF(p). Its label is
the integer c_0 + c_1 p + ... + c_{d-1} p^{d-1}; labels give the canonical
bijection GF(p^d) <-> {0..p^d-1} used by every group constructor, with 0 -> 0
and 1 -> 1.

The modulus is the monic irreducible polynomial whose lower coefficients,
read as a label, are least. The primitive element is the least label of
multiplicative order p^d - 1.
"""
import functools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple, Union

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcd, gf_mul, gf_pow_mod, gf_rem, gf_sub

from ..core.config import Config
from ..core.errors import FieldError, ParameterError
from ..safety.validator import ScaleValidator, enforce
from .numtheory import order_dividing

logger = logging.getLogger(__name__)

# Fields up to this order keep exp/log tables for multiplication
TABLE_LIMIT = 2**20


def _is_irreducible(poly: List[int], p: int) -> bool:
    """Ben-Or test: no factor of degree i <= d/2 divides x^(p^i) - x."""
    d = len(poly) - 1
    if d <= 0:
        return False
    x = [1, 0]
    b = x
    for _ in range(d // 2):
        b = gf_pow_mod(b, p, poly, p, ZZ)
        if gf_gcd(gf_sub(b, x, p, ZZ), poly, p, ZZ) != [1]:
            return False
    return True


class FieldCtx:
    """
    The field GF(p^d) with a fixed modulus and primitive element.

    Attributes:
        p: characteristic
        d: degree over GF(p)
        order: p^d
        modulus: coefficients of the modulus, lowest degree first, leading 1 last
    """

    def __init__(self, p: int, d: int, modulus: Sequence[int]):
        self.p = p
        self.d = d
        self.order = p ** d
        self.modulus = tuple(modulus)
        self._poly_modulus = [int(c) for c in reversed(self.modulus)]
        self._exp = None
        self._log = None
        self.primitive_label = self._find_primitive()
        if self.order <= TABLE_LIMIT:
            self._build_tables()
        logger.info("Field GF(%d^%d) with modulus %s, primitive element %s",
                    p, d, self.modulus, self.coeffs_of(self.primitive_label))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, d={self.d})"

    # Labels and polynomials

    def coeffs_of(self, label: int) -> Tuple[int, ...]:
        coeffs = []
        for _ in range(self.d):
            label, c = divmod(label, self.p)
            coeffs.append(c)
        return tuple(coeffs)

    def label_of(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.d or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"{tuple(coeffs)} is not a coefficient vector of GF({self.p}^{self.d})")
        label = 0
        for c in reversed(coeffs):
            label = label * self.p + c
        return label

    def _poly(self, label: int) -> List[int]:
        poly = list(reversed(self.coeffs_of(label)))
        while poly and poly[0] == 0:
            poly.pop(0)
        return poly

    def _label_of_poly(self, poly: List[int]) -> int:
        label = 0
        for c in poly:
            label = label * self.p + int(c)
        return label

    def _poly_mul(self, a: int, b: int) -> int:
        product = gf_mul(self._poly(a), self._poly(b), self.p, ZZ)
        return self._label_of_poly(gf_rem(product, self._poly_modulus, self.p, ZZ))

    def _poly_pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n else 1
        return self._label_of_poly(gf_pow_mod(self._poly(a), n, self._poly_modulus, self.p, ZZ))

    def _find_primitive(self) -> int:
        n = self.order - 1
        for label in range(1, self.order):
            if order_dividing(n, lambda k: self._poly_pow(label, k) == 1) == n:
                return label
        raise FieldError(f"no primitive element found in GF({self.p}^{self.d})")

    def _build_tables(self):
        n = self.order - 1
        exp = [0] * n
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, self.primitive_label)
        self._exp = exp
        self._log = log

    # Label arithmetic

    def add_labels(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        result, place = 0, 1
        while a or b:
            result += ((a + b) % p) * place
            a //= p
            b //= p
            place *= p
        return result

    def neg_label(self, a: int) -> int:
        p = self.p
        result, place = 0, 1
        while a:
            result += ((-a) % p) * place
            a //= p
            place *= p
        return result

    def mul_labels(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._poly_mul(a, b)

    def pow_label(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise FieldError("zero has no inverse")
            return 0 if n else 1
        if self._exp is not None:
            return self._exp[(self._log[a] * n) % (self.order - 1)]
        return self._poly_pow(a, n % (self.order - 1))

    def inv_label(self, a: int) -> int:
        return self.pow_label(a, -1)

    def frobenius_label(self, a: int, j: int) -> int:
        """a^(p^j); the identity when j is a multiple of d."""
        return self.pow_label(a, self.p ** (j % self.d))

    def power_of_primitive(self, k: int) -> int:
        return self.pow_label(self.primitive_label, k)

    # Element API

    def element(self, value: Union[int, Sequence[int]]) -> 'FieldElement':
        """Element from a label or a lowest-degree-first coefficient vector."""
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise FieldError(f"label {value} outside GF({self.p}^{self.d})")
            return FieldElement(self, value)
        return FieldElement(self, self.label_of(value))

    @property
    def zero(self) -> 'FieldElement':
        return FieldElement(self, 0)

    @property
    def one(self) -> 'FieldElement':
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> 'FieldElement':
        return FieldElement(self, self.primitive_label)

    def elements(self) -> Iterator['FieldElement']:
        return (FieldElement(self, label) for label in range(self.order))


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldCtx, stored by label."""
    ctx: FieldCtx
    label: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.ctx.coeffs_of(self.label)

    def _check(self, other: 'FieldElement') -> FieldCtx:
        if not isinstance(other, FieldElement) or other.ctx is not self.ctx:
            raise FieldError("elements of different fields combined")
        return self.ctx

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        ctx = self._check(other)
        return FieldElement(ctx, ctx.add_labels(self.label, other.label))

    def __neg__(self) -> 'FieldElement':
        return FieldElement(self.ctx, self.ctx.neg_label(self.label))

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        return self + (-other)

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        ctx = self._check(other)
        return FieldElement(ctx, ctx.mul_labels(self.label, other.label))

    def __pow__(self, n: int) -> 'FieldElement':
        return FieldElement(self.ctx, self.ctx.pow_label(self.label, n))

    def inverse(self) -> 'FieldElement':
        return FieldElement(self.ctx, self.ctx.inv_label(self.label))

    def __truediv__(self, other: 'FieldElement') -> 'FieldElement':
        return self * other.inverse()

    def frobenius(self, j: int = 1) -> 'FieldElement':
        return FieldElement(self.ctx, self.ctx.frobenius_label(self.label, j))

    def multiplicative_order(self) -> int:
        if self.label == 0:
            raise FieldError("zero has no multiplicative order")
        return order_dividing(self.ctx.order - 1,
                              lambda m: self.ctx.pow_label(self.label, m) == 1)

    def __repr__(self) -> str:
        return f"FieldElement({self.coeffs}, p={self.ctx.p})"


@functools.lru_cache(maxsize=None)
def field_make(p: int, d: int) -> FieldCtx:
    """
    Deterministic context for GF(p^d).

    Raises:
        FieldError: if p is not prime
        ParameterError: if d < 1
        BoundExceededError: if p^d exceeds Config.FIELD_MAX_ORDER
    """
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    if d < 1:
        raise ParameterError(f"field degree must be positive, got {d}")
    enforce(ScaleValidator().validate_field(p, d), bound=Config.FIELD_MAX_ORDER)
    for tail in range(p ** d):
        coeffs = []
        value = tail
        for _ in range(d):
            value, c = divmod(value, p)
            coeffs.append(c)
        poly = [1] + list(reversed(coeffs))
        if _is_irreducible(poly, p):
            return FieldCtx(p, d, coeffs + [1])
    raise FieldError(f"no irreducible polynomial of degree {d} over GF({p})")
