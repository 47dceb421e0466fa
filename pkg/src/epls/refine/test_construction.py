"""
Unit tests for building refinements and extracting their inner spaces.
"""
import unittest

from ..core.errors import BoundExceededError, PreconditionError
from ..families.affine import AffineParams, build_affine_group
from ..families.orbit_union import PRIMITIVE_25_1_SEEDS, build_orbit_union_space, primitive_25_1
from ..linspace.space import (LinearSpace, SpaceParams, pairs_space, parameters,
                              single_line_space, validate)
from ..star.ls import build_ls, lambda_line
from ..star.pairs import GroupSpacePair
from .construction import (check_refinement_scale, construct_refinement, extract_inner_space,
                           refinement_incidences, roundtrip_check)
from .presets import ag_plane_preset, crosspairs_preset
from .report import refinement_report

FANO = validate(7, [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)])


class TestSmallPair(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        group = build_affine_group(AffineParams(2, 4, 5, 2))
        cls.pair = GroupSpacePair(build_ls(group), group)
        cls.ell = lambda_line(group, 0, 1)

    def test_subfield_line(self):
        """Test that the line through 0 and 1 is the order-4 subfield."""
        self.assertEqual(self.ell, (0, 1, 6, 7))

    def test_single_line_inner(self):
        """Test that the one-line inner space reproduces the space."""
        refined = construct_refinement(self.pair, self.ell, single_line_space(4))
        self.assertEqual(refined, self.pair.space)
        self.assertEqual(extract_inner_space(refined, self.pair, self.ell), single_line_space(4))
        self.assertTrue(roundtrip_check(refined, self.pair, self.ell))

    def test_pairs_inner(self):
        """Test that the pairs space extracts to pairs on the line and round-trips."""
        refined = pairs_space(16)
        self.assertEqual(extract_inner_space(refined, self.pair, self.ell), pairs_space(4))
        self.assertTrue(roundtrip_check(refined, self.pair, self.ell))
        self.assertEqual(construct_refinement(self.pair, self.ell, pairs_space(4)), refined)

    def test_construct_preconditions(self):
        """Test that each failed hypothesis carries its own code."""
        cases = [
            ((0, 1, 2), single_line_space(4), 'not-a-line'),
            (self.ell, pairs_space(5), 'inner-size'),
            (self.ell, LinearSpace(4, [(0, 1, 2, 3), (0, 1)]), 'inner-invalid'),
            (self.ell, validate(4, [(0, 1, 2), (0, 3), (1, 3), (2, 3)]), 'inner-not-invariant'),
        ]
        for ell, inner, code in cases:
            with self.subTest(code=code):
                with self.assertRaises(PreconditionError) as ctx:
                    construct_refinement(self.pair, ell, inner)
                self.assertEqual(ctx.exception.code, code)

    def test_extract_preconditions(self):
        cases = [
            (pairs_space(15), 'degree-mismatch'),
            (single_line_space(16), 'not-a-refinement'),
        ]
        for refined, code in cases:
            with self.subTest(code=code):
                with self.assertRaises(PreconditionError) as ctx:
                    extract_inner_space(refined, self.pair, self.ell)
                self.assertEqual(ctx.exception.code, code)

    def test_not_line_transitive(self):
        group = primitive_25_1()
        pair = GroupSpacePair(build_orbit_union_space(group, PRIMITIVE_25_1_SEEDS), group)
        with self.assertRaises(PreconditionError) as ctx:
            construct_refinement(pair, PRIMITIVE_25_1_SEEDS[0], single_line_space(4))
        self.assertEqual(ctx.exception.code, 'not-line-transitive')


class TestScale(unittest.TestCase):
    def test_fano_on_large_space(self):
        """Test that Fano planes on the 6725201 lines of size 7 over 7^5 points are refused."""
        self.assertEqual(refinement_incidences(6725201, FANO), 6725201 * 21)
        with self.assertRaises(BoundExceededError):
            check_refinement_scale(6725201, FANO)
        check_refinement_scale(6725201, FANO, max_incidences=2 * 10**8)


class TestAgPlanePreset(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.pair, cls.ell, cls.inner = ag_plane_preset()
        cls.refined = construct_refinement(cls.pair, cls.ell, cls.inner)

    def test_parameters(self):
        """Test a 256-point space with 5440 lines of size 4 refining LS(2,8,17,2)."""
        self.assertEqual(parameters(self.pair.space), SpaceParams(256, 272, 16, 17))
        self.assertEqual(parameters(self.refined), SpaceParams(256, 5440, 4, 85))

    def test_report(self):
        """Test five line orbits, one per parallel class of the inner plane."""
        report = refinement_report(self.refined, self.pair)
        self.assertTrue(report.refines)
        self.assertTrue(report.preserved)
        self.assertFalse(report.line_transitive)
        self.assertEqual(report.line_orbits, 5)
        self.assertTrue(report.transverse_inherited)
        self.assertEqual(report.to_dict()['sizes'], {'4': 5440})

    def test_roundtrip(self):
        self.assertEqual(extract_inner_space(self.refined, self.pair, self.ell), self.inner)
        self.assertTrue(roundtrip_check(self.refined, self.pair, self.ell))


class TestCrossPairsPreset(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.pair, cls.ell, cls.inner = crosspairs_preset()
        cls.refined = construct_refinement(cls.pair, cls.ell, cls.inner)

    def test_mixed_sizes(self):
        """Test two 4-lines and sixteen 2-lines inside each of the 255 lines."""
        self.assertEqual(self.inner.line_sizes(), {4: 2, 2: 16})
        self.assertEqual(self.refined.line_sizes(), {4: 510, 2: 4080})

    def test_report(self):
        report = refinement_report(self.refined, self.pair)
        self.assertFalse(report.line_transitive)
        self.assertEqual(report.line_orbits, 5)
        self.assertTrue(report.transverse_inherited)
        self.assertIsNone(report.parameters.k)

    def test_roundtrip(self):
        self.assertTrue(roundtrip_check(self.refined, self.pair, self.ell))


if __name__ == '__main__':
    unittest.main()
