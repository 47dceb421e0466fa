"""
Unit tests for Property (*).
"""
import unittest

from ..core.errors import IntransitiveError
from ..families.affine import AffineParams, build_affine_group
from ..families.psl2 import build_psl2_dihedral_coset
from ..perm.group import group_from_generators
from ..perm.permutation import Permutation
from .property import has_property_star, has_property_star_naive


class TestPropertyStar(unittest.TestCase):
    def test_psl2_q17(self):
        """Test PSL2(16) on the 120 cosets of D_34."""
        self.assertTrue(has_property_star(build_psl2_dihedral_coset(17)))

    def test_affine_e2(self):
        """Test the extremely primitive (2,4,5,2) group."""
        self.assertTrue(has_property_star(build_affine_group(AffineParams(2, 4, 5, 2))))

    def test_frobenius(self):
        """Test a Frobenius group, where every two-point stabilizer is trivial."""
        self.assertTrue(has_property_star(build_affine_group(AffineParams(13, 1, 3, 1))))

    def test_violation(self):
        """Test that (5,2,3,2) fails with a triple based at 0."""
        verdict = has_property_star(build_affine_group(AffineParams(5, 2, 3, 2)))
        self.assertFalse(verdict)
        u, v, w = verdict.witness
        self.assertEqual(u, 0)
        self.assertNotIn(w, (0, v))

    def test_agrees_with_naive(self):
        """Test the reduced scan against all triples on small affine groups."""
        for params in (AffineParams(5, 2, 3, 2), AffineParams(2, 4, 5, 2),
                       AffineParams(2, 4, 15, 1), AffineParams(3, 3, 13, 1),
                       AffineParams(2, 4, 3, 2), AffineParams(3, 2, 2, 2)):
            group = build_affine_group(params)
            with self.subTest(params=str(params)):
                self.assertEqual(has_property_star(group).holds,
                                 has_property_star_naive(group).holds)

    def test_intransitive(self):
        """Test that intransitive groups are refused."""
        group = group_from_generators([Permutation([1, 0, 2, 3])])
        with self.assertRaises(IntransitiveError):
            has_property_star(group)
        with self.assertRaises(IntransitiveError):
            has_property_star_naive(group)


if __name__ == '__main__':
    unittest.main()
