"""
Number theory for the classification predicate: factorisation, divisors,
multiplicative orders and primitive prime divisors.
"""
from typing import Callable, Iterator, List, Optional, Tuple

from sympy import divisors as _divisors
from sympy import factorint, isprime, n_order, perfect_power

from ..core.errors import ParameterError

MAX_FACTOR_INPUT = 2**63


def factorize(n: int) -> List[int]:
    """
    Prime factors of n with multiplicity, in increasing order.

    sympy's factorint does trial division first and Pollard rho on the
    remaining cofactor.

    Raises:
        ParameterError: if n < 1 or n > 2^63
    """
    if n < 1 or n > MAX_FACTOR_INPUT:
        raise ParameterError(f"cannot factorize {n}")
    return [r for r, k in sorted(factorint(n).items()) for _ in range(k)]


def divisors(n: int) -> List[int]:
    return list(_divisors(n))


def multiplicative_order(a: int, n: int) -> int:
    return int(n_order(a, n))


def order_dividing(n: int, is_one: Callable[[int], bool]) -> int:
    """
    Least m dividing n with is_one(m), for an element whose order divides n.

    Strips each prime of n while the reduced power is still the identity.
    """
    order = n
    for r in factorint(n):
        while order % r == 0 and is_one(order // r):
            order //= r
    return order


def is_primitive_prime_divisor(t: int, p: int, d: int) -> bool:
    """
    True iff t is a prime dividing p^d - 1 but no p^i - 1 with 1 <= i < d.
    """
    if t < 2 or d < 1 or not isprime(t) or p % t == 0:
        return False
    return multiplicative_order(p, t) == d


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """(p, d) with q = p^d and p prime, or None."""
    if q < 2:
        return None
    if isprime(q):
        return q, 1
    found = perfect_power(q)
    if not found:
        return None
    base, exponent = found
    split = prime_power(base)
    if split is None:
        return None
    return split[0], split[1] * exponent


def prime_powers_up_to(limit: int) -> Iterator[Tuple[int, int]]:
    """All (p, d) with p^d <= limit, ordered by p then d."""
    for q in range(2, limit + 1):
        if isprime(q):
            d = 1
            while q ** d <= limit:
                yield q, d
                d += 1
