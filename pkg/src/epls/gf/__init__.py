"""
Finite fields GF(p^d) in polynomial basis, and the number theory around them.
"""
from .field import FieldCtx, FieldElement, field_make
from .numtheory import (divisors, factorize, is_primitive_prime_divisor, multiplicative_order,
                        order_dividing, prime_power, prime_powers_up_to)
