"""
Unit tests for the group file format.
"""
import os
import tempfile
import unittest

from ..core.errors import FormatError
from .group import group_from_generators
from .io import format_group, parse_group, parse_permutation, read_group, write_group
from .permutation import Permutation


class TestGroupFormat(unittest.TestCase):
    def setUp(self):
        self.group = group_from_generators([
            Permutation.from_cycles(5, [(0, 1, 2), (3, 4)]),
            Permutation.identity(5),
            Permutation.from_cycles(5, [(4, 0)]),
        ])
        self.text = "degree 5\n(0 1 2)(3 4)\n()\n(0 4)\n"

    def test_print(self):
        """Test canonical printing."""
        self.assertEqual(format_group(self.group), self.text)

    def test_parse(self):
        """Test parsing back to the same generators."""
        parsed = parse_group(self.text)
        self.assertEqual(parsed.degree, 5)
        self.assertEqual(parsed.generators, self.group.generators)
        self.assertEqual(format_group(parsed), self.text)

    def test_lenient_input(self):
        """Test comments, blank lines, spacing and non-canonical cycles."""
        text = "# a comment\ndegree 5\n\n( 4 3 )(2 0 1)\n"
        parsed = parse_group(text)
        self.assertEqual(str(parsed.generators[0]), '(0 1 2)(3 4)')

    def test_errors(self):
        """Test malformed files."""
        with self.assertRaises(FormatError):
            parse_group("(0 1)\n")
        with self.assertRaises(FormatError):
            parse_group("degree 3\n")
        with self.assertRaises(FormatError) as ctx:
            parse_group("degree 3\n(0 1)\n(0 3)\n")
        self.assertEqual(ctx.exception.line_number, 3)
        with self.assertRaises(FormatError):
            parse_permutation("(0 1", 3)
        with self.assertRaises(FormatError):
            parse_permutation("(0 1)(1 2)", 3)

    def test_files(self):
        """Test writing and reading a group file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'g.txt')
            write_group(path, self.group)
            self.assertEqual(read_group(path).generators, self.group.generators)


if __name__ == '__main__':
    unittest.main()
