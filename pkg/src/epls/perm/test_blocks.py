"""
Unit tests for blocks, primitivity and subdegrees.
"""
import unittest

from ..core.errors import IntransitiveError
from .blocks import (UnionFind, is_primitive, minimal_block, nontrivial_block,
                     rank_and_subdegrees)
from .group import cyclic_group, group_from_generators, symmetric_group
from .permutation import Permutation


class TestUnionFind(unittest.TestCase):
    def test_union(self):
        """Test merging classes."""
        uf = UnionFind(5)
        uf.union(0, 3)
        uf.union(3, 4)
        self.assertEqual(uf.find(0), uf.find(4))
        self.assertNotEqual(uf.find(0), uf.find(1))


class TestBlocks(unittest.TestCase):
    def test_regular_cyclic(self):
        """Test blocks of regular cyclic groups."""
        c4 = cyclic_group(4)
        self.assertEqual(minimal_block(c4, (0, 2)), (0, 2))
        self.assertEqual(minimal_block(c4, (0, 1)), (0, 1, 2, 3))
        self.assertFalse(is_primitive(c4))
        c6 = cyclic_group(6)
        self.assertEqual(minimal_block(c6, (0, 3)), (0, 3))
        self.assertEqual(minimal_block(c6, (0, 2)), (0, 2, 4))

    def test_block_partitions_domain(self):
        """Test that the translates of a block partition the points."""
        dihedral = group_from_generators([
            Permutation.from_cycles(8, [tuple(range(8))]),
            Permutation.from_cycles(8, [(1, 7), (2, 6), (3, 5)]),
        ])
        block = minimal_block(dihedral, (0, 4))
        self.assertEqual(block, (0, 4))
        translates = {tuple(sorted(g.image_of_set(block))) for g in dihedral.elements()}
        covered = sorted(x for t in translates for x in t)
        self.assertEqual(covered, list(range(8)))

    def test_symmetric_primitive(self):
        """Test that symmetric groups are primitive."""
        for n in range(2, 7):
            self.assertTrue(is_primitive(symmetric_group(n)))

    def test_alt4_primitive(self):
        """Test that C_2^2 : C_3 on 4 points is primitive."""
        alt4 = group_from_generators([
            Permutation.from_cycles(4, [(0, 1), (2, 3)]),
            Permutation.from_cycles(4, [(1, 2, 3)]),
        ])
        self.assertTrue(is_primitive(alt4))
        self.assertIsNone(nontrivial_block(alt4))

    def test_prime_degree(self):
        """Test that regular groups of prime degree count as primitive."""
        self.assertTrue(is_primitive(cyclic_group(7)))
        self.assertTrue(is_primitive(group_from_generators([Permutation.identity(1)])))

    def test_intransitive(self):
        """Test that intransitive groups are refused."""
        c3 = group_from_generators([Permutation.from_cycles(4, [(1, 2, 3)])])
        with self.assertRaises(IntransitiveError):
            is_primitive(c3)
        with self.assertRaises(IntransitiveError):
            rank_and_subdegrees(c3)


class TestSubdegrees(unittest.TestCase):
    def test_two_transitive(self):
        """Test subdegrees {1, n-1} of 2-transitive groups."""
        self.assertEqual(rank_and_subdegrees(symmetric_group(5)), (1, 4))

    def test_regular(self):
        """Test all-ones subdegrees of a regular group."""
        self.assertEqual(rank_and_subdegrees(cyclic_group(5)), (1, 1, 1, 1, 1))

    def test_dihedral(self):
        """Test subdegrees of the dihedral group on a pentagon."""
        d10 = group_from_generators([
            Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]),
            Permutation.from_cycles(5, [(1, 4), (2, 3)]),
        ])
        self.assertEqual(rank_and_subdegrees(d10), (1, 2, 2))


if __name__ == '__main__':
    unittest.main()
