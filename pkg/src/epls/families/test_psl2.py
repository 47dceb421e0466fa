"""
Unit tests for PSL2(2^m) and its action on cosets of D_2q.
"""
import random
import unittest

from ..core.errors import BoundExceededError, ParameterError
from ..perm.blocks import rank_and_subdegrees
from ..perm.group import group_from_generators
from .psl2 import (build_psl2_dihedral_coset, find_dihedral_pair, is_fermat_prime,
                   projective_line_group)


class TestProjectiveLine(unittest.TestCase):
    def test_orders(self):
        """Test |PSL2(2^m)| = 2^m (4^m - 1) on 2^m + 1 points."""
        self.assertEqual(projective_line_group(2).order(), 60)
        group = projective_line_group(4)
        self.assertEqual(group.degree, 17)
        self.assertEqual(group.order(), 4080)

    def test_dihedral_pair(self):
        """Test that the seeded search returns an inverted element of order q."""
        group = projective_line_group(4)
        g, s = find_dihedral_pair(group, 17, random.Random(3))
        self.assertEqual(g.order(), 17)
        self.assertEqual(s.order(), 2)
        self.assertEqual(g.conjugate(s), g.inverse())
        self.assertTrue(group.contains(g) and group.contains(s))
        self.assertEqual(group_from_generators([g, s]).order(), 34)

    def test_fermat(self):
        """Test Fermat prime recognition."""
        self.assertEqual([q for q in range(300) if is_fermat_prime(q)], [3, 5, 17, 257])
        self.assertTrue(is_fermat_prime(65537))


class TestDihedralCosets(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.group = build_psl2_dihedral_coset(17)

    def test_alt5(self):
        """Test PSL2(4) on six cosets of D_10."""
        group = build_psl2_dihedral_coset(5)
        self.assertEqual(group.degree, 6)
        self.assertEqual(group.order(), 60)
        self.assertEqual(group.point_stabilizer(0).order(), 10)

    def test_q17(self):
        """Test degree 120, order 4080 and dihedral stabilizer of order 34."""
        self.assertEqual(self.group.degree, 120)
        self.assertEqual(self.group.order(), 4080)
        stabilizer = self.group.point_stabilizer(0)
        self.assertEqual(stabilizer.order(), 34)
        involutions = [g for g in stabilizer.elements() if g.order() == 2]
        self.assertEqual(len(involutions), 17)

    def test_subdegrees(self):
        """Test rank 8 with all nontrivial subdegrees 17."""
        self.assertEqual(rank_and_subdegrees(self.group), (1,) + (17,) * 7)

    def test_two_point_stabilizers(self):
        """Test that every two-point stabilizer through 0 has order 2."""
        for orb in self.group.point_stabilizer(0).orbits():
            if orb == (0,):
                continue
            self.assertEqual(self.group.pointwise_stabilizer([0, orb[0]]).order(), 2)

    def test_invalid(self):
        """Test rejected values of q."""
        for q in (3, 7, 9):
            with self.assertRaises(ParameterError):
                build_psl2_dihedral_coset(q)
        with self.assertRaises(BoundExceededError):
            build_psl2_dihedral_coset(257)


if __name__ == '__main__':
    unittest.main()
