"""
Unit tests for the line stabilizer report.
"""
import unittest

from ..core.errors import BoundExceededError
from ..families.affine import AffineParams, build_affine_group
from ..families.psl2 import build_psl2_dihedral_coset
from .stabilizers import line_stabilizer_report


class TestLineStabilizers(unittest.TestCase):
    def check(self, report, pointwise, stabilizer, induced):
        self.assertEqual(report.pointwise_order, pointwise)
        self.assertEqual(report.two_point_order, pointwise)
        self.assertEqual(report.stabilizer_order, stabilizer)
        self.assertEqual(report.normalizer_order, stabilizer)
        self.assertEqual(report.induced_order, induced)
        self.assertEqual(report.kernel_order, pointwise)
        self.assertEqual(len(report.line), induced)
        self.assertTrue(report.pointwise_is_two_point)
        self.assertTrue(report.stabilizer_is_normalizer)
        self.assertTrue(report.quotient_order_matches)
        self.assertTrue(report.induced_regular)
        self.assertTrue(report.holds)

    def test_psl2_q17(self):
        """Test |G_[l]| = 2, |G_l| = 16 and a regular G_l^l of order 8."""
        group = build_psl2_dihedral_coset(17)
        v = group.point_stabilizer(0).orbits()[1][0]
        report = line_stabilizer_report(group, 0, v, transverse=True)
        self.check(report, 2, 16, 8)
        self.assertEqual(report.line_orbit_size, 255)

    def test_affine_16(self):
        """Test (2,4,5,2): |G_[l]| = 2, |G_l| = 8, G_l^l regular of order 4."""
        report = line_stabilizer_report(build_affine_group(AffineParams(2, 4, 5, 2)), 0, 1)
        self.check(report, 2, 8, 4)
        self.assertEqual(report.line_orbit_size, 20)

    def test_affine_256(self):
        """Test (2,8,17,2): |G_[l]| = 2, |G_l| = 32, G_l^l regular of order 16."""
        report = line_stabilizer_report(build_affine_group(AffineParams(2, 8, 17, 2)), 0, 1)
        self.check(report, 2, 32, 16)
        self.assertEqual(report.to_dict()['induced_order'], 16)

    def test_normalizer_bound(self):
        with self.assertRaises(BoundExceededError):
            line_stabilizer_report(build_affine_group(AffineParams(2, 4, 5, 2)), 0, 1, limit=100)


if __name__ == '__main__':
    unittest.main()
