"""
Concrete concept classes over bounded universes.
"""

from itertools import combinations, product
from typing import Any, Iterator
from src.concepts.base import ConceptClass
from src.models.concepts import (
    ClassId,
    ConceptDesc,
    Empty,
    FiniteSet,
    Interval,
    Pair,
    PrefixConcept,
    Singleton,
)


class Singletons(ConceptClass):
    """All one-element concepts ``{j}`` for ``j`` in ``[0, m]``."""

    def __init__(self, m: int):
        super().__init__(ClassId(name="singletons", size=m))
        self.m = m

    def universe(self) -> Iterator[int]:
        return iter(range(self.m + 1))

    def concepts(self) -> Iterator[ConceptDesc]:
        return (Singleton(j=j) for j in range(self.m + 1))

    def members(self, c: ConceptDesc) -> Iterator[int]:
        return iter([c.j]) if isinstance(c, Singleton) else iter(())

    def contains(self, c: ConceptDesc, x: Any) -> bool:
        return isinstance(c, Singleton) and c.j == x

    def is_point(self, x: Any) -> bool:
        return isinstance(x, int) and 0 <= x <= self.m

    def is_concept(self, c: ConceptDesc) -> bool:
        return isinstance(c, Singleton) and 0 <= c.j <= self.m

    @property
    def contains_empty(self) -> bool:
        return False

    def normalize(self, c: ConceptDesc) -> ConceptDesc:
        if isinstance(c, FiniteSet) and len(c.elements) == 1:
            return Singleton(j=next(iter(c.elements)))
        return c

    def subset_of(self, c1: ConceptDesc, c2: ConceptDesc) -> bool:
        return c1 == c2


class Intervals(ConceptClass):
    """Integer intervals ``[lo, hi]`` inside ``[0, U)``; optionally with the empty concept."""

    def __init__(self, size: int, with_empty: bool = False):
        name = "intervals_or_empty" if with_empty else "intervals"
        super().__init__(ClassId(name=name, size=size))
        self.size = size
        self.with_empty = with_empty

    @property
    def low(self) -> int:
        return 0

    @property
    def high(self) -> int:
        return self.size - 1

    def universe(self) -> Iterator[int]:
        return iter(range(self.low, self.high + 1))

    def concepts(self) -> Iterator[ConceptDesc]:
        if self.with_empty:
            yield Empty()
        for lo in range(self.low, self.high + 1):
            for hi in range(lo, self.high + 1):
                yield Interval(lo=lo, hi=hi)

    def members(self, c: ConceptDesc) -> Iterator[int]:
        if isinstance(c, Interval):
            return iter(range(c.lo, c.hi + 1))
        return iter(())

    def contains(self, c: ConceptDesc, x: Any) -> bool:
        return isinstance(c, Interval) and c.lo <= x <= c.hi

    def is_point(self, x: Any) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and self.low <= x <= self.high

    def is_concept(self, c: ConceptDesc) -> bool:
        if isinstance(c, Empty):
            return self.with_empty
        return isinstance(c, Interval) and self.low <= c.lo and c.hi <= self.high

    @property
    def contains_empty(self) -> bool:
        return self.with_empty

    def normalize(self, c: ConceptDesc) -> ConceptDesc:
        if isinstance(c, FiniteSet) and not c.elements:
            return Empty()
        return c

    def subset_of(self, c1: ConceptDesc, c2: ConceptDesc) -> bool:
        if not isinstance(c1, Interval):
            return True
        return isinstance(c2, Interval) and c2.lo <= c1.lo and c1.hi <= c2.hi

    def diff_witness(self, c1: ConceptDesc, c2: ConceptDesc):
        if self.subset_of(c1, c2):
            return None
        if not isinstance(c2, Interval) or c1.lo < c2.lo or c1.lo > c2.hi:
            return c1.lo
        return c2.hi + 1


class SignedHalves(Intervals):
    """The two halves ``[0, U)`` and ``[-U, -1]`` of a signed range."""

    def __init__(self, size: int):
        super().__init__(size)
        self.class_id = ClassId(name="halves", size=size)

    @property
    def low(self) -> int:
        return -self.size

    @property
    def non_negative(self) -> Interval:
        return Interval(lo=0, hi=self.size - 1)

    @property
    def negative(self) -> Interval:
        return Interval(lo=-self.size, hi=-1)

    def concepts(self) -> Iterator[ConceptDesc]:
        return iter([self.non_negative, self.negative])

    def is_concept(self, c: ConceptDesc) -> bool:
        return c in (self.non_negative, self.negative)


class FiniteSets(ConceptClass):
    """Every subset of ``[0, U)``, the empty set included."""

    def __init__(self, size: int):
        super().__init__(ClassId(name="finitesets", size=size))
        self.size = size

    def universe(self) -> Iterator[int]:
        return iter(range(self.size))

    def concepts(self) -> Iterator[ConceptDesc]:
        points = range(self.size)
        for n in range(self.size + 1):
            for chosen in combinations(points, n):
                yield FiniteSet(elements=frozenset(chosen))

    def members(self, c: ConceptDesc) -> Iterator[int]:
        if isinstance(c, FiniteSet):
            return iter(sorted(c.elements))
        return iter(())

    def contains(self, c: ConceptDesc, x: Any) -> bool:
        return isinstance(c, FiniteSet) and x in c.elements

    def is_point(self, x: Any) -> bool:
        return isinstance(x, int) and 0 <= x < self.size

    def is_concept(self, c: ConceptDesc) -> bool:
        if isinstance(c, Empty):
            return True
        return isinstance(c, FiniteSet) and all(self.is_point(e) for e in c.elements)

    @property
    def contains_empty(self) -> bool:
        return True

    def normalize(self, c: ConceptDesc) -> ConceptDesc:
        if isinstance(c, Empty):
            return FiniteSet()
        if isinstance(c, Interval):
            return FiniteSet(elements=frozenset(range(c.lo, c.hi + 1)))
        if isinstance(c, Singleton):
            return FiniteSet(elements=frozenset({c.j}))
        return c


class LetterPairs(ConceptClass):
    """The two concepts ``{a}`` and ``{a, b}`` over the universe ``{a, b}``."""

    SMALL = FiniteSet(elements=frozenset({"a"}))
    LARGE = FiniteSet(elements=frozenset({"a", "b"}))

    def __init__(self):
        super().__init__(ClassId(name="letters"))

    def universe(self) -> Iterator[str]:
        return iter(["a", "b"])

    def concepts(self) -> Iterator[ConceptDesc]:
        return iter([self.SMALL, self.LARGE])

    def members(self, c: ConceptDesc) -> Iterator[str]:
        if isinstance(c, FiniteSet):
            return iter(sorted(c.elements))
        return iter(())

    def contains(self, c: ConceptDesc, x: Any) -> bool:
        return isinstance(c, FiniteSet) and x in c.elements

    def is_point(self, x: Any) -> bool:
        return x in ("a", "b")

    def is_concept(self, c: ConceptDesc) -> bool:
        return c in (self.SMALL, self.LARGE)

    @property
    def contains_empty(self) -> bool:
        return False


class PrefixClass(ConceptClass):
    """Concepts c(s) over (string, value) pairs with symbols and values in ``[0, U)``.

    Membership uses the closed form: ``(t, a)`` is in c(s) iff ``t == s``, or
    ``t`` is a strict prefix of ``s`` and ``a != s[len(t)]``.
    """

    def __init__(self, size: int, max_len: int):
        super().__init__(ClassId(name="prefix", size=size, max_len=max_len))
        self.size = size
        self.max_len = max_len

    def strings(self) -> Iterator[tuple]:
        for n in range(self.max_len + 1):
            yield from product(range(self.size), repeat=n)

    def universe(self) -> Iterator[Pair]:
        for s in self.strings():
            for a in range(self.size):
                yield Pair(s, a)

    def concepts(self) -> Iterator[ConceptDesc]:
        return (PrefixConcept(s=s) for s in self.strings())

    def members(self, c: ConceptDesc) -> Iterator[Pair]:
        if not isinstance(c, PrefixConcept):
            return
        s = c.s
        for n in range(len(s)):
            t, excluded = s[:n], s[n]
            for a in range(self.size):
                if a != excluded:
                    yield Pair(t, a)
        for a in range(self.size):
            yield Pair(s, a)

    def contains(self, c: ConceptDesc, x: Any) -> bool:
        if not isinstance(c, PrefixConcept):
            return False
        t, a = x
        s = c.s
        if t == s:
            return True
        return len(t) < len(s) and s[: len(t)] == t and a != s[len(t)]

    def order_key(self, x: Pair) -> tuple:
        return (len(x.prefix), x.prefix, x.value)

    def is_point(self, x: Any) -> bool:
        return (
            isinstance(x, Pair)
            and len(x.prefix) <= self.max_len
            and all(0 <= a < self.size for a in x.prefix)
            and 0 <= x.value < self.size
        )

    def is_concept(self, c: ConceptDesc) -> bool:
        return (
            isinstance(c, PrefixConcept)
            and len(c.s) <= self.max_len
            and all(0 <= a < self.size for a in c.s)
        )

    @property
    def contains_empty(self) -> bool:
        return False

    def subset_of(self, c1: ConceptDesc, c2: ConceptDesc) -> bool:
        return c1.s == c2.s
