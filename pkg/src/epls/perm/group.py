"""
Permutation groups backed by a deterministic Schreier-Sims stabilizer chain.

A requested base prefix comes first. Each generator fixing every base point
chosen so far contributes its least moved point, and these points follow the
prefix in increasing order. A level opened during closure appends the least
point moved by its new strong generator, so the base need not stay sorted.
A known group order, when supplied, stops the closure as soon as the product
of basic orbit lengths reaches it.
"""
import logging
import math
import threading
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..core.config import Config
from ..core.errors import DegreeMismatchError, EmptyGeneratorsError, PointRangeError
from ..safety.validator import ScaleValidator, enforce
from .permutation import Permutation

logger = logging.getLogger(__name__)


class StabilizerChain:
    """
    Base and strong generating set with explicit transversals.

    Level i holds base point base[i], the strong generators fixing base[:i],
    and a transversal mapping each point of the basic orbit to an element
    carrying base[i] to it.
    """

    def __init__(self, degree: int, base: Sequence[int] = (),
                 order_hint: Optional[int] = None):
        self.degree = degree
        self.base: List[int] = []
        self.gens: List[List[Permutation]] = []
        self.transversals: List[Dict[int, Permutation]] = []
        self.order_hint = order_hint
        for point in base:
            self._add_level(point)

    def _add_level(self, point: int):
        self.base.append(point)
        self.gens.append([])
        self.transversals.append({point: Permutation.identity(self.degree)})

    def _recompute(self, level: int):
        root = self.base[level]
        gens = self.gens[level]
        transversal = {root: Permutation.identity(self.degree)}
        queue = [root]
        for beta in queue:
            u = transversal[beta]
            for s in gens:
                gamma = s[beta]
                if gamma not in transversal:
                    transversal[gamma] = u * s
                    queue.append(gamma)
        self.transversals[level] = transversal

    def sift(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """
        Strip g through the levels from start.

        Returns:
            tuple: (residue, level) where level is the first level whose
                   transversal misses the image, or len(base) if g sifted through
        """
        for i in range(start, len(self.base)):
            u = self.transversals[i].get(g[self.base[i]])
            if u is None:
                return g, i
            g = g * u.inverse()
        return g, len(self.base)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self.sift(g)
        return residue.is_identity()

    def order(self, start: int = 0) -> int:
        return math.prod(len(t) for t in self.transversals[start:])

    def _complete(self) -> bool:
        return self.order_hint is not None and self.order() == self.order_hint

    def _insert(self, h: Permutation, first: int, last: int):
        """Add h as a strong generator on levels first..last, opening a level if needed."""
        if last == len(self.base):
            self._add_level(h.first_moved())
        for level in range(first, last + 1):
            self.gens[level].append(h)
            self._recompute(level)

    def _close(self, level: int):
        """Holt's closure loop, working downwards from the given level."""
        i = level
        while i >= 0:
            if self._complete():
                return
            restart = False
            for beta, u in list(self.transversals[i].items()):
                for s in self.gens[i]:
                    gamma = s[beta]
                    schreier = u * s * self.transversals[i][gamma].inverse()
                    h, j = self.sift(schreier, i + 1)
                    if h.is_identity():
                        continue
                    self._insert(h, i + 1, j)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def build(self, generators: Iterable[Permutation]) -> 'StabilizerChain':
        """Populate the chain from generators and close it."""
        gens = [g for g in generators if not g.is_identity()]
        fresh: List[int] = []
        for g in gens:
            if g.fixes(self.base + fresh):
                fresh.append(g.first_moved())
        for point in sorted(fresh):
            self._add_level(point)
        for level, point in enumerate(self.base):
            fixed = self.base[:level]
            self.gens[level] = [g for g in gens if g.fixes(fixed)]
            self._recompute(level)
        self._close(len(self.base) - 1)
        return self

    def extend(self, g: Permutation) -> bool:
        """
        Add g to the group the chain describes.

        Returns:
            bool: False if g was already a member
        """
        h, j = self.sift(g)
        if h.is_identity():
            return False
        self._insert(h, 0, j)
        self._close(j)
        return True

    def tail(self, level: int) -> 'StabilizerChain':
        """Chain of the pointwise stabilizer of base[:level]."""
        chain = StabilizerChain(self.degree)
        chain.base = self.base[level:]
        chain.gens = [list(g) for g in self.gens[level:]]
        chain.transversals = self.transversals[level:]
        chain.order_hint = chain.order()
        return chain

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as products of transversal elements."""
        ident = Permutation.identity(self.degree)
        if not self.base:
            yield ident
            return
        for reps in product(*(list(t.values()) for t in reversed(self.transversals))):
            g = ident
            for u in reps:
                g = g * u
            yield g


class PermGroup:
    """
    A permutation group given by generators.

    The stabilizer chain is computed lazily, once per base prefix, behind a
    lock; afterwards every query is read-only.
    """

    def __init__(self, generators: Sequence[Permutation], order: Optional[int] = None,
                 chain: Optional[StabilizerChain] = None):
        if not generators:
            raise EmptyGeneratorsError("a group needs at least one generator")
        degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generators of degrees {degree} and {g.degree} mixed")
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.degree = degree
        self._order_hint = order
        self._chains: Dict[Tuple[int, ...], StabilizerChain] = {}
        if chain is not None:
            self._chains[()] = chain
        self._lock = threading.Lock()
        self._orbits = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"

    def chain(self, prefix: Sequence[int] = ()) -> StabilizerChain:
        """Stabilizer chain whose base starts with prefix."""
        prefix = tuple(prefix)
        for x in prefix:
            self._check_point(x)
        with self._lock:
            for chain in self._chains.values():
                if tuple(chain.base[:len(prefix)]) == prefix:
                    return chain
            hint = self._order_hint
            if hint is None and () in self._chains:
                hint = self._chains[()].order()
            chain = StabilizerChain(self.degree, prefix, hint).build(self.generators)
            self._chains[prefix] = chain
            if self._order_hint is None:
                self._order_hint = chain.order()
            logger.debug("Chain built: degree %d, base %s, order %d",
                         self.degree, chain.base, chain.order())
            return chain

    @property
    def base(self) -> List[int]:
        return list(self.chain().base)

    def order(self) -> int:
        return self.chain().order()

    def contains(self, g: Permutation) -> bool:
        return self.chain().contains(g)

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def _check_point(self, x: int):
        if not 0 <= x < self.degree:
            raise PointRangeError(f"point {x} outside 0..{self.degree - 1}")

    def orbit_transversal(self, x: int) -> Dict[int, Permutation]:
        """Map from each point of the orbit of x to an element carrying x to it."""
        self._check_point(x)
        transversal = {x: Permutation.identity(self.degree)}
        queue = [x]
        for beta in queue:
            u = transversal[beta]
            for s in self.generators:
                gamma = s[beta]
                if gamma not in transversal:
                    transversal[gamma] = u * s
                    queue.append(gamma)
        return transversal

    def orbit(self, x: int) -> Tuple[int, ...]:
        self._check_point(x)
        return next(orb for orb in self.orbits() if x in orb)

    def orbits(self) -> List[Tuple[int, ...]]:
        """Point orbits as sorted tuples, ordered by least element."""
        if self._orbits is None:
            seen = [False] * self.degree
            orbits = []
            for x in range(self.degree):
                if seen[x]:
                    continue
                seen[x] = True
                queue = [x]
                for beta in queue:
                    for s in self.generators:
                        gamma = s[beta]
                        if not seen[gamma]:
                            seen[gamma] = True
                            queue.append(gamma)
                orbits.append(tuple(sorted(queue)))
            self._orbits = orbits
        return self._orbits

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def fixed_points(self) -> Tuple[int, ...]:
        return tuple(x for x in range(self.degree)
                     if all(g[x] == x for g in self.generators))

    def pointwise_stabilizer(self, xs: Iterable[int]) -> 'PermGroup':
        """Subgroup fixing every point of xs, independent of their order."""
        prefix = tuple(sorted(set(xs)))
        if not prefix:
            return self
        self.order()
        chain = self.chain(prefix).tail(len(prefix))
        gens = chain.gens[0] if chain.base else []
        if not gens:
            gens = [Permutation.identity(self.degree)]
        return PermGroup(gens, order=chain.order(), chain=chain)

    def point_stabilizer(self, x: int) -> 'PermGroup':
        return self.pointwise_stabilizer([x])

    def elements(self, limit: Optional[int] = None) -> Iterator[Permutation]:
        """
        Iterate over every element.

        Raises:
            BoundExceededError: if the order exceeds limit (default Config.ENUMERATION_LIMIT)
        """
        limit = Config.ENUMERATION_LIMIT if limit is None else limit
        enforce(ScaleValidator().validate_group_order(self.order(), limit), bound=limit)
        return self.chain().elements()

    def random_element(self, rng) -> Permutation:
        """Uniformly random element; rng is a random.Random."""
        chain = self.chain()
        g = Permutation.identity(self.degree)
        for transversal in reversed(chain.transversals):
            g = g * transversal[rng.choice(sorted(transversal))]
        return g

    def is_subgroup(self, other: 'PermGroup') -> bool:
        """True if every generator of self lies in other."""
        if self.degree != other.degree:
            return False
        if other.order() % self.order():
            return False
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: 'PermGroup') -> bool:
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup(other))

    def is_semiregular(self) -> bool:
        """All point stabilizers trivial."""
        return all(len(orb) == self.order() for orb in self.orbits())

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self.degree


def group_from_generators(gens: Sequence[Permutation], order: Optional[int] = None) -> PermGroup:
    """
    Build a group from generators.

    Args:
        gens: nonempty sequence of permutations of equal degree
        order: known group order, used only to stop Schreier-Sims early

    Raises:
        EmptyGeneratorsError: if gens is empty
        DegreeMismatchError: if degrees differ
    """
    group = PermGroup(list(gens), order=order)
    logger.debug("Group from %d generators on %d points", len(group.generators), group.degree)
    return group


def subgroup_from_elements(degree: int, elements: Iterable[Permutation],
                           order: Optional[int] = None) -> PermGroup:
    """Group generated by elements, keeping only those that enlarge it."""
    chain = StabilizerChain(degree, order_hint=order)
    kept = []
    for g in elements:
        if chain.extend(g):
            kept.append(g)
            if chain._complete():
                break
    if not kept:
        kept = [Permutation.identity(degree)]
    return PermGroup(kept, order=chain.order(), chain=chain)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return group_from_generators([Permutation.identity(1)], order=1)
    gens = [Permutation.from_cycles(n, [(0, 1)]), Permutation.from_cycles(n, [tuple(range(n))])]
    return group_from_generators(gens, order=math.factorial(n))


def cyclic_group(n: int) -> PermGroup:
    return group_from_generators([Permutation.from_cycles(n, [tuple(range(n))])], order=n)
