"""
Unit tests for factorisation and primitive prime divisors.
"""
import math
import random
import unittest

from ..core.errors import ParameterError
from .numtheory import (divisors, factorize, is_primitive_prime_divisor, multiplicative_order,
                        order_dividing, prime_power, prime_powers_up_to)


class TestFactorize(unittest.TestCase):
    def test_small(self):
        """Test small inputs."""
        self.assertEqual(factorize(1), [])
        self.assertEqual(factorize(24), [2, 2, 2, 3])
        self.assertEqual(factorize(2801), [2801])
        self.assertEqual(factorize(16806), [2, 3, 2801])

    def test_recomposes(self):
        """Test that factors multiply back to random 63-bit inputs."""
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randrange(1, 2**63)
            self.assertEqual(math.prod(factorize(n)), n)

    def test_range(self):
        """Test inputs outside the supported range."""
        with self.assertRaises(ParameterError):
            factorize(0)
        with self.assertRaises(ParameterError):
            factorize(2**63 + 1)


class TestPrimitivePrimeDivisor(unittest.TestCase):
    def test_examples(self):
        """Test the standard examples."""
        self.assertTrue(is_primitive_prime_divisor(3, 2, 2))
        self.assertFalse(is_primitive_prime_divisor(3, 2, 4))
        self.assertTrue(is_primitive_prime_divisor(17, 2, 8))
        self.assertTrue(is_primitive_prime_divisor(2801, 7, 5))
        self.assertTrue(is_primitive_prime_divisor(5, 2, 4))

    def test_non_prime(self):
        """Test composite and non-divisor inputs."""
        self.assertFalse(is_primitive_prime_divisor(15, 2, 4))
        self.assertFalse(is_primitive_prime_divisor(7, 2, 4))
        self.assertFalse(is_primitive_prime_divisor(2, 3, 2))

    def test_matches_definition(self):
        """Test against the divisibility definition, including t = p."""
        for p in (2, 3, 5, 7):
            for d in range(1, 9):
                for t in set(factorize(p ** d - 1)) | {p}:
                    expected = ((p ** d - 1) % t == 0
                                and all((p ** i - 1) % t for i in range(1, d)))
                    self.assertEqual(is_primitive_prime_divisor(t, p, d), expected)
        self.assertEqual(multiplicative_order(2, 17), 8)


class TestHelpers(unittest.TestCase):
    def test_divisors(self):
        """Test divisor listing."""
        self.assertEqual(divisors(12), [1, 2, 3, 4, 6, 12])

    def test_order_dividing(self):
        """Test the order of residues mod 13 from their powers."""
        for a in range(1, 13):
            self.assertEqual(order_dividing(12, lambda m: pow(a, m, 13) == 1),
                             multiplicative_order(a, 13))
        self.assertEqual(order_dividing(1, lambda m: True), 1)

    def test_prime_power(self):
        """Test prime power decomposition."""
        self.assertEqual(prime_power(1024), (2, 10))
        self.assertEqual(prime_power(81), (3, 4))
        self.assertEqual(prime_power(13), (13, 1))
        self.assertIsNone(prime_power(12))
        self.assertIsNone(prime_power(36))

    def test_prime_powers_up_to(self):
        """Test the list of prime powers up to 16."""
        qs = sorted(p ** d for p, d in prime_powers_up_to(16))
        self.assertEqual(qs, [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])


if __name__ == '__main__':
    unittest.main()
