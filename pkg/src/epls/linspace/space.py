"""
Linear spaces: point sets with lines such that every pair of distinct points
lies on exactly one line.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix

from ..core.config import Config
from ..core.errors import (DegreeMismatchError, LinearSpaceError, ParameterError,
                           PointRangeError)
from ..perm.group import PermGroup
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)

Line = Tuple[int, ...]

# How many offending pairs an error carries
SAMPLE_SIZE = 10


@dataclass(frozen=True)
class SpaceParams:
    """
    Parameter block (v, b, k, r); k and r are None unless the space is regular.
    """
    v: int
    b: int
    k: Optional[int] = None
    r: Optional[int] = None

    def identities_hold(self) -> bool:
        """r(k-1) = v-1, bk(k-1) = v(v-1), b >= v and v >= k(k-1)+1."""
        if self.k is None or self.r is None:
            return False
        v, b, k, r = self.v, self.b, self.k, self.r
        return (r * (k - 1) == v - 1 and b * k * (k - 1) == v * (v - 1)
                and b >= v and v >= k * (k - 1) + 1)

    def to_dict(self) -> dict:
        return {'v': self.v, 'b': self.b, 'k': self.k, 'r': self.r}


class LinearSpace:
    """
    A validated linear space on points 0..v-1.

    Lines are sorted tuples, kept in lexicographic order; two spaces are equal
    exactly when their point counts and line sets agree. Build instances with
    validate().
    """

    def __init__(self, v: int, lines: Iterable[Sequence[int]]):
        self.v = v
        self.lines: Tuple[Line, ...] = tuple(sorted({tuple(sorted(line)) for line in lines}))
        self._line_set = frozenset(self.lines)
        self._pair_lookup = None

    def __repr__(self) -> str:
        return f"LinearSpace(v={self.v}, b={self.b})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearSpace):
            return NotImplemented
        return self.v == other.v and self.lines == other.lines

    def __hash__(self) -> int:
        return hash((self.v, self.lines))

    def __contains__(self, line) -> bool:
        return tuple(sorted(line)) in self._line_set

    def __iter__(self):
        return iter(self.lines)

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def b(self) -> int:
        return len(self.lines)

    def line_sizes(self) -> Counter:
        """Histogram of line sizes."""
        return Counter(len(line) for line in self.lines)

    def point_degrees(self) -> np.ndarray:
        """Number of lines through each point."""
        if not self.lines:
            return np.zeros(self.v, dtype=np.int64)
        flat = np.fromiter((x for line in self.lines for x in line), dtype=np.int64)
        return np.bincount(flat, minlength=self.v)

    def _lookup(self) -> Dict[Tuple[int, int], int]:
        if self._pair_lookup is None:
            lookup = {}
            for index, line in enumerate(self.lines):
                for i, a in enumerate(line):
                    for b in line[i + 1:]:
                        lookup[(a, b)] = index
            self._pair_lookup = lookup
        return self._pair_lookup

    def line_through(self, a: int, b: int) -> Line:
        """The unique line containing the distinct points a and b."""
        if a == b:
            raise ParameterError("a line is determined by two distinct points")
        key = (a, b) if a < b else (b, a)
        try:
            return self.lines[self._lookup()[key]]
        except KeyError:
            raise PointRangeError(f"no line through {a} and {b}")

    def lines_through(self, u: int) -> List[Line]:
        return [line for line in self.lines if u in line]


def validate(v: int, lines: Iterable[Sequence[int]]) -> LinearSpace:
    """
    Build a linear space, checking that every pair lies on exactly one line.

    Pairs are counted with a dense v x v numpy accumulator up to
    Config.DENSE_PAIR_LIMIT points, and with a scipy sparse matrix above.

    Raises:
        LinearSpaceError: on short lines, repeated lines, uncovered or repeated pairs
        PointRangeError: on points outside 0..v-1
    """
    if v < 1:
        raise ParameterError(f"a linear space needs at least one point, got v={v}")
    canonical = [tuple(sorted(set(line))) for line in lines]
    for line in canonical:
        if len(line) < 2:
            raise LinearSpaceError(f"line {line} has fewer than two points")
        if line[0] < 0 or line[-1] >= v:
            raise PointRangeError(f"line {line} leaves 0..{v - 1}")
    if len(set(canonical)) != len(canonical):
        repeats = [line for line, n in Counter(canonical).items() if n > 1]
        raise LinearSpaceError(f"{len(repeats)} lines repeat", repeated=repeats[:SAMPLE_SIZE])

    rows, cols = _pair_arrays(canonical)
    total = v * (v - 1) // 2
    if v <= Config.DENSE_PAIR_LIMIT:
        counts = np.zeros((v, v), dtype=np.int32)
        np.add.at(counts, (rows, cols), 1)
        upper = np.triu_indices(v, 1)
        covered = counts[upper]
        uncovered = np.flatnonzero(covered == 0)
        repeated = np.flatnonzero(covered > 1)
        uncovered_pairs = [(int(upper[0][i]), int(upper[1][i])) for i in uncovered[:SAMPLE_SIZE]]
        repeated_pairs = [(int(upper[0][i]), int(upper[1][i])) for i in repeated[:SAMPLE_SIZE]]
        n_uncovered, n_repeated = len(uncovered), len(repeated)
    else:
        matrix = coo_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)),
                            shape=(v, v)).tocsr()
        matrix.sum_duplicates()
        coo = matrix.tocoo()
        heavy = coo.data > 1
        n_repeated = int(heavy.sum())
        repeated_pairs = [(int(a), int(b)) for a, b in
                          zip(coo.row[heavy][:SAMPLE_SIZE], coo.col[heavy][:SAMPLE_SIZE])]
        n_uncovered = total - matrix.nnz
        uncovered_pairs = _sample_uncovered(matrix, v) if n_uncovered else []

    if n_uncovered or n_repeated:
        raise LinearSpaceError(
            f"{n_uncovered} pairs uncovered, {n_repeated} pairs on several lines",
            uncovered=uncovered_pairs, repeated=repeated_pairs)
    logger.debug("Validated linear space v=%d b=%d", v, len(canonical))
    return LinearSpace(v, canonical)


def _pair_arrays(lines: List[Line]) -> Tuple[np.ndarray, np.ndarray]:
    """All point pairs (a < b) of all lines, vectorised per line size."""
    by_size: Dict[int, List[Line]] = {}
    for line in lines:
        by_size.setdefault(len(line), []).append(line)
    rows, cols = [], []
    for k, group in by_size.items():
        block = np.asarray(group, dtype=np.int64)
        i, j = np.triu_indices(k, 1)
        rows.append(block[:, i].ravel())
        cols.append(block[:, j].ravel())
    if not rows:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(rows), np.concatenate(cols)


def _sample_uncovered(matrix, v: int) -> List[Tuple[int, int]]:
    sample = []
    for a in range(v):
        present = set(matrix.indices[matrix.indptr[a]:matrix.indptr[a + 1]].tolist())
        for b in range(a + 1, v):
            if b not in present:
                sample.append((a, b))
                if len(sample) == SAMPLE_SIZE:
                    return sample
    return sample


def pairs_space(v: int) -> LinearSpace:
    """All 2-subsets as lines."""
    return LinearSpace(v, [(a, b) for a in range(v) for b in range(a + 1, v)])


def single_line_space(v: int) -> LinearSpace:
    return LinearSpace(v, [tuple(range(v))])


def is_nontrivial(space: LinearSpace) -> bool:
    """At least two lines, every line with at least three points."""
    return space.b >= 2 and all(len(line) >= 3 for line in space.lines)


def is_regular(space: LinearSpace) -> bool:
    return space.b > 0 and len(space.line_sizes()) == 1


def parameters(space: LinearSpace) -> SpaceParams:
    if not is_regular(space):
        return SpaceParams(space.v, space.b)
    k = len(space.lines[0])
    degrees = space.point_degrees()
    r = int(degrees[0]) if degrees.size and (degrees == degrees[0]).all() else None
    return SpaceParams(space.v, space.b, k, r)


def is_refinement(refined: LinearSpace, space: LinearSpace) -> bool:
    """
    True iff every line of refined lies inside a line of space.

    Raises:
        DegreeMismatchError: if the point counts differ
    """
    if refined.v != space.v:
        raise DegreeMismatchError(f"point counts {refined.v} and {space.v} differ")
    for line in refined.lines:
        host = space.line_through(line[0], line[1])
        if not set(line).issubset(host):
            return False
    return True


def is_automorphism(space: LinearSpace, g: Permutation) -> bool:
    """
    True iff g maps every line onto a line.

    Raises:
        DegreeMismatchError: if g does not act on the points of space
    """
    if g.degree != space.v:
        raise DegreeMismatchError(f"permutation of degree {g.degree} on {space.v} points")
    return all(g.image_of_set(line) in space._line_set for line in space.lines)


def group_preserves(space: LinearSpace, group: PermGroup) -> bool:
    """Generator check; automorphisms of a space form a group."""
    if group.degree != space.v:
        raise DegreeMismatchError(f"group of degree {group.degree} on {space.v} points")
    return all(is_automorphism(space, g) for g in group.generators)
