"""
Permutations of {0..n-1} acting on the right.

Composition is left-to-right: for permutations a, b the product a * b maps x
to b(a(x)), i.e. x^(ab) = (x^a)^b. Every group operation in epls uses this
convention.
"""
import math
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import DegreeMismatchError, ParameterError, PointRangeError


class Permutation:
    """A bijection on {0..degree-1}, stored as its image tuple."""

    __slots__ = ('_images', '_hash', '_inverse', '_array')

    def __init__(self, images: Iterable[int], check: bool = True):
        """
        Args:
            images: images[x] is the image of x
            check: verify that images is a bijection
        """
        self._images = tuple(images)
        if not self._images:
            raise ParameterError("a permutation needs degree >= 1")
        if check and sorted(self._images) != list(range(len(self._images))):
            raise ParameterError(f"not a permutation: {self._images!r}")
        self._hash = None
        self._inverse = None
        self._array = None

    @classmethod
    def identity(cls, degree: int) -> 'Permutation':
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        """Build a permutation from disjoint cycles over 0-based points."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for x in cycle:
                if not 0 <= x < degree:
                    raise PointRangeError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise ParameterError(f"point {x} appears in two cycles")
                seen.add(x)
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    @property
    def array(self) -> np.ndarray:
        """Image table as a read-only numpy array, for vectorised set images."""
        if self._array is None:
            arr = np.asarray(self._images, dtype=np.int64)
            arr.setflags(write=False)
            self._array = arr
        return self._array

    def __call__(self, x: int) -> int:
        return self._images[x]

    def __getitem__(self, x: int) -> int:
        return self._images[x]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return compose(self, other)

    def __pow__(self, n: int) -> 'Permutation':
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> 'Permutation':
        if self._inverse is None:
            inv = [0] * len(self._images)
            for x, y in enumerate(self._images):
                inv[y] = x
            self._inverse = Permutation(inv, check=False)
            self._inverse._inverse = self
        return self._inverse

    def conjugate(self, g: 'Permutation') -> 'Permutation':
        """Return g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def first_moved(self) -> Optional[int]:
        """Smallest point moved by the permutation, or None for the identity."""
        for i, x in enumerate(self._images):
            if i != x:
                return i
        return None

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, x in enumerate(self._images) if i != x)

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        seen = [False] * len(self._images)
        out = []
        for i in range(len(self._images)):
            if seen[i] or self._images[i] == i:
                continue
            cycle = [i]
            seen[i] = True
            j = self._images[i]
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self._images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def fixes(self, points: Iterable[int]) -> bool:
        return all(self._images[x] == x for x in points)

    def image_of_set(self, points: Iterable[int]) -> Tuple[int, ...]:
        """Image of a point set, as a sorted tuple."""
        return tuple(sorted(self._images[x] for x in points))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: 'Permutation') -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images)
        return self._hash

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(map(str, c)) + ')' for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """
    Left-to-right product: the result maps x to b(a(x)).

    Raises:
        DegreeMismatchError: if the degrees differ
    """
    if a.degree != b.degree:
        raise DegreeMismatchError(f"cannot compose degrees {a.degree} and {b.degree}")
    bi = b._images
    return Permutation([bi[x] for x in a._images], check=False)


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)
