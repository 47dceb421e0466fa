"""
Unit tests for permutations.
"""
import unittest
from itertools import permutations

from ..core.errors import DegreeMismatchError, ParameterError, PointRangeError
from .permutation import Permutation, compose, identity


class TestPermutation(unittest.TestCase):
    def setUp(self):
        self.sym3 = [Permutation(p) for p in permutations(range(3))]

    def test_construction(self):
        """Test validation of image tuples and cycles."""
        self.assertEqual(Permutation([1, 2, 0]).images, (1, 2, 0))
        with self.assertRaises(ParameterError):
            Permutation([0, 0, 1])
        with self.assertRaises(ParameterError):
            Permutation([])
        with self.assertRaises(PointRangeError):
            Permutation.from_cycles(3, [(0, 3)])
        with self.assertRaises(ParameterError):
            Permutation.from_cycles(4, [(0, 1), (1, 2)])

    def test_compose_convention(self):
        """Test the left-to-right product x^(ab) = (x^a)^b."""
        a = Permutation.from_cycles(3, [(0, 1, 2)])
        b = Permutation.from_cycles(3, [(0, 1)])
        ab = compose(a, b)
        for x in range(3):
            self.assertEqual(ab[x], b[a[x]])
        self.assertEqual(ab, Permutation.from_cycles(3, [(1, 2)]))
        self.assertEqual(a * b, ab)

    def test_identity_and_inverse(self):
        """Test identity and two-sided inverses."""
        e = identity(3)
        for g in self.sym3:
            self.assertEqual(compose(e, g), g)
            self.assertEqual(compose(g, e), g)
            self.assertTrue(compose(g, g.inverse()).is_identity())
            self.assertTrue(compose(g.inverse(), g).is_identity())

    def test_sym3_table(self):
        """Test the full multiplication table of Sym(3)."""
        elements = set(self.sym3)
        for a in self.sym3:
            for b in self.sym3:
                ab = a * b
                self.assertIn(ab, elements)
                for c in self.sym3:
                    # Associativity
                    self.assertEqual((a * b) * c, a * (b * c))
        # Each row of the table is a permutation of the group
        for a in self.sym3:
            self.assertEqual({a * b for b in self.sym3}, elements)

    def test_degree_mismatch(self):
        """Test that composing different degrees fails."""
        with self.assertRaises(DegreeMismatchError):
            compose(identity(3), identity(4))

    def test_power_and_order(self):
        """Test powers, orders and conjugation."""
        g = Permutation.from_cycles(6, [(0, 1, 2), (3, 4)])
        self.assertEqual(g.order(), 6)
        self.assertTrue((g ** 6).is_identity())
        self.assertFalse((g ** 3).is_identity())
        self.assertEqual(g ** -1, g.inverse())
        h = Permutation.from_cycles(6, [(0, 5)])
        # Conjugation relabels the cycles: g^h has cycle (5 1 2)(3 4)
        self.assertEqual(g.conjugate(h), Permutation.from_cycles(6, [(5, 1, 2), (3, 4)]))

    def test_cycles_and_printing(self):
        """Test canonical cycle notation."""
        g = Permutation.from_cycles(6, [(4, 3), (2, 0, 1)])
        self.assertEqual(g.cycles(), [(0, 1, 2), (3, 4)])
        self.assertEqual(str(g), '(0 1 2)(3 4)')
        self.assertEqual(str(identity(5)), '()')
        self.assertEqual(g.support(), (0, 1, 2, 3, 4))
        self.assertEqual(g.first_moved(), 0)
        self.assertIsNone(identity(4).first_moved())

    def test_set_images(self):
        """Test images of point sets and the numpy image table."""
        g = Permutation.from_cycles(5, [(0, 4, 2)])
        self.assertEqual(g.image_of_set([0, 1, 2]), (0, 1, 4))
        self.assertEqual(g.array.tolist(), [4, 1, 0, 3, 2])
        self.assertTrue(g.fixes([1, 3]))
        self.assertFalse(g.fixes([0]))


if __name__ == '__main__':
    unittest.main()
