"""
Unit tests for finite field arithmetic.
"""
import random
import unittest

from ..core.errors import BoundExceededError, FieldError, ParameterError
from .field import field_make


class TestFieldMake(unittest.TestCase):
    def test_prime_field(self):
        """Test GF(2) and GF(13)."""
        f2 = field_make(2, 1)
        self.assertEqual(f2.order, 2)
        self.assertEqual(f2.primitive_element.label, 1)
        f13 = field_make(13, 1)
        # 2 is the least generator of the units mod 13
        self.assertEqual(f13.primitive_label, 2)

    def test_gf16(self):
        """Test GF(16): modulus and order of the primitive element."""
        f16 = field_make(2, 4)
        self.assertEqual(f16.order, 16)
        # x^4 + x + 1, lowest degree first
        self.assertEqual(f16.modulus, (1, 1, 0, 0, 1))
        self.assertEqual(f16.primitive_element.multiplicative_order(), 15)
        self.assertEqual((f16.primitive_element ** 3).multiplicative_order(), 5)
        self.assertEqual(f16.one.multiplicative_order(), 1)

    def test_gf4(self):
        """Test GF(4): modulus x^2 + x + 1 and primitive element x."""
        f4 = field_make(2, 2)
        self.assertEqual(f4.modulus, (1, 1, 1))
        self.assertEqual(f4.primitive_label, 2)

    def test_large_field(self):
        """Test GF(7^5)."""
        f = field_make(7, 5)
        self.assertEqual(f.order, 16807)
        alpha = f.primitive_element
        self.assertEqual((alpha ** 16806).label, 1)
        self.assertNotEqual((alpha ** (16806 // 2801)).label, 1)

    def test_errors(self):
        """Test invalid parameters."""
        with self.assertRaises(FieldError):
            field_make(4, 1)
        with self.assertRaises(ParameterError):
            field_make(2, 0)
        with self.assertRaises(BoundExceededError) as ctx:
            field_make(2, 64)
        self.assertIn("stretch-scale", str(ctx.exception))

    def test_deterministic(self):
        """Test that contexts are re-derivable from (p, d)."""
        self.assertIs(field_make(3, 2), field_make(3, 2))


class TestFieldArithmetic(unittest.TestCase):
    def setUp(self):
        self.fields = [field_make(2, 4), field_make(3, 2), field_make(5, 2), field_make(7, 1)]

    def test_labels(self):
        """Test the label bijection."""
        f = field_make(3, 2)
        self.assertEqual(f.coeffs_of(7), (1, 2))
        self.assertEqual(f.label_of((1, 2)), 7)
        self.assertEqual(f.element((1, 2)).label, 7)
        with self.assertRaises(FieldError):
            f.element(9)

    def test_field_axioms(self):
        """Test distributivity, inverses and additive order p."""
        for f in self.fields:
            elements = list(f.elements())
            for a in elements:
                self.assertEqual((a + (-a)).label, 0)
                if a.label:
                    self.assertEqual((a * a.inverse()).label, 1)
                p_fold = f.zero
                for _ in range(f.p):
                    p_fold = p_fold + a
                self.assertEqual(p_fold.label, 0)
            rng = random.Random(7)
            for _ in range(200):
                a, b, c = (rng.choice(elements) for _ in range(3))
                self.assertEqual(a * (b + c), a * b + a * c)
                self.assertEqual((a * b) * c, a * (b * c))
                self.assertEqual(a - b + b, a)

    def test_primitive_element_cycles(self):
        """Test that x -> x * alpha permutes the nonzero elements in one cycle."""
        for f in self.fields:
            alpha = f.primitive_element
            x = f.one
            seen = set()
            for _ in range(f.order - 1):
                seen.add(x.label)
                x = x * alpha
            self.assertEqual(x.label, 1)
            self.assertEqual(seen, set(range(1, f.order)))

    def test_frobenius(self):
        """Test that Frobenius is an automorphism of order d."""
        for f in self.fields:
            for a in f.elements():
                self.assertEqual(a.frobenius(f.d), a)
                for b in f.elements():
                    self.assertEqual((a + b).frobenius(1), a.frobenius(1) + b.frobenius(1))
                    self.assertEqual((a * b).frobenius(1), a.frobenius(1) * b.frobenius(1))

    def test_gf4_frobenius(self):
        """Test that squaring swaps the two primitive cube roots in GF(4)."""
        f4 = field_make(2, 2)
        w = f4.element(2)
        w2 = f4.element(3)
        self.assertEqual(w.frobenius(1), w2)
        self.assertEqual(w2.frobenius(1), w)
        self.assertEqual(f4.element(1).frobenius(1).label, 1)

    def test_alpha_15(self):
        """Test alpha^15 = 1 in GF(16)."""
        f16 = field_make(2, 4)
        self.assertEqual((f16.primitive_element ** 15).label, 1)
        for k in range(1, 15):
            self.assertNotEqual((f16.primitive_element ** k).label, 1)

    def test_context_mismatch(self):
        """Test that elements of different fields do not mix."""
        with self.assertRaises(FieldError):
            field_make(2, 4).one + field_make(3, 2).one

    def test_polynomial_path(self):
        """Test that table and polynomial multiplication agree."""
        f = field_make(5, 2)
        for a in range(f.order):
            for b in range(f.order):
                self.assertEqual(f.mul_labels(a, b), f._poly_mul(a, b) if a and b else 0)


if __name__ == '__main__':
    unittest.main()
