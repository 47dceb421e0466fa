"""
Unit tests for scale validation.
"""
import unittest
from unittest import mock

from ..core.config import Config
from ..core.errors import BoundExceededError
from .validator import ScaleValidator, enforce


class TestScaleValidator(unittest.TestCase):
    def setUp(self):
        self.validator = ScaleValidator()

    def test_points(self):
        """Test point count bounds."""
        self.assertTrue(self.validator.validate_points(1, 10))
        self.assertTrue(self.validator.validate_points(10, 10))
        self.assertFalse(self.validator.validate_points(0, 10))
        self.assertFalse(self.validator.validate_points(11, 10))

    def test_field(self):
        """Test the field size bound."""
        self.assertTrue(self.validator.validate_field(2, 8)[0])
        ok, message = self.validator.validate_field(2, 64)
        self.assertFalse(ok)
        self.assertIn("stretch-scale", message)
        with mock.patch.object(Config, 'FIELD_MAX_ORDER', 100):
            self.assertFalse(self.validator.validate_field(11, 2)[0])

    def test_psl2(self):
        """Test that q = 17 passes and the larger Fermat primes are stretch-scale."""
        ok, message = self.validator.validate_psl2(17)
        self.assertTrue(ok)
        self.assertEqual(message, "Coset action size validated successfully")
        ok, message = self.validator.validate_psl2(257)
        self.assertFalse(ok)
        self.assertIn("stretch-scale", message)
        self.assertFalse(self.validator.validate_psl2(65537)[0])

    def test_incidences(self):
        """Test the refinement memory estimate."""
        # seven Fano lines of three points on each of 6725201 lines
        ok, message = self.validator.validate_incidences(6725201 * 21)
        self.assertFalse(ok)
        self.assertIn("stretch-scale", message)
        self.assertTrue(self.validator.validate_incidences(5440 * 4)[0])
        self.assertFalse(self.validator.validate_incidences(100, max_incidences=99)[0])

    def test_survey(self):
        """Test the survey cap and its override."""
        self.assertTrue(self.validator.validate_survey(64)[0])
        self.assertFalse(self.validator.validate_survey(Config.SURVEY_MAX_POINTS + 1)[0])
        self.assertTrue(self.validator.validate_survey(Config.SURVEY_MAX_POINTS + 1, force=True)[0])
        self.assertFalse(self.validator.validate_survey(1, force=True)[0])

    def test_geometry(self):
        """Test affine geometry size checks."""
        self.assertTrue(self.validator.validate_geometry(4, 2)[0])
        with mock.patch.object(Config, 'AG_MAX_POINTS', 15):
            self.assertFalse(self.validator.validate_geometry(4, 2)[0])

    def test_enforce(self):
        """Test that enforce raises with the validator message."""
        enforce((True, "fine"))
        with self.assertRaises(BoundExceededError) as ctx:
            enforce(self.validator.validate_group_order(100, 10), bound=10)
        self.assertEqual(ctx.exception.bound, 10)
        self.assertIn("group order 100", str(ctx.exception))


if __name__ == '__main__':
    unittest.main()
