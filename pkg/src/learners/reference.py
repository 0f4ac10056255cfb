"""
Reference sublearners for the component concept classes.

Each learner identifies a target in one class from one query kind. The
membership, superset and subset learners, and the equivalence learners for
finite sets, ask a number of queries fixed by the target whatever valid
counterexamples they receive. The interval and singleton equivalence learners
do not: their counts follow the counterexamples they are given, so their
standalone counts assume the honest oracle's least counterexamples.
"""

from typing import Callable
import logging
from src.concepts.classes import (
    FiniteSets,
    Intervals,
    LetterPairs,
    PrefixClass,
    SignedHalves,
    Singletons,
)
from src.core.errors import NoConsistentHypothesis, ProtocolViolation
from src.core.learner import (
    Learner,
    Protocol,
    counterexample_point,
    membership_answer,
    positive_point,
)
from src.models.concepts import (
    ConceptDesc,
    Empty,
    FiniteSet,
    Interval,
    Pair,
    PrefixConcept,
    Singleton,
)
from src.models.queries import Query

logger = logging.getLogger(__name__)


class SingletonMemLearner(Learner):
    """Asks 0, 1, ... m-1 in turn; ``{m}`` is left when all of them are negative."""

    concept_class: Singletons

    def protocol(self) -> Protocol:
        m = self.concept_class.m
        for j in range(m):
            if membership_answer((yield Query.mem(j))):
                return Singleton(j=j)
        return Singleton(j=m)


class SingletonSupLearner(Learner):
    """One superset query: the only possible counterexample is the target's point."""

    concept_class: Singletons

    def protocol(self) -> Protocol:
        x = counterexample_point((yield Query.sup(Singleton(j=0))))
        return Singleton(j=0 if x is None else x)


class SingletonSubLearner(Learner):
    concept_class: Singletons

    def protocol(self) -> Protocol:
        m = self.concept_class.m
        for j in range(m):
            if counterexample_point((yield Query.sub(Singleton(j=j)))) is None:
                return Singleton(j=j)
        return Singleton(j=m)


class SingletonEqLearner(Learner):
    """Scans like the subset learner but jumps as soon as a positive counterexample shows up."""

    concept_class: Singletons

    def protocol(self) -> Protocol:
        m = self.concept_class.m
        for j in range(m):
            x = counterexample_point((yield Query.eq(Singleton(j=j))))
            if x is None:
                return Singleton(j=j)
            if x != j:
                return Singleton(j=x)
        return Singleton(j=m)


class SingletonPosLearner(Learner):
    concept_class: Singletons

    def protocol(self) -> Protocol:
        x = positive_point((yield Query.pos()))
        if x is None:
            raise ProtocolViolation("singleton targets always have a member")
        return Singleton(j=x)


class IntervalMemLearner(Learner):
    """Scans up to the first member, then extends the upper end while answers stay positive."""

    concept_class: Intervals

    def protocol(self) -> Protocol:
        cls = self.concept_class
        lo = None
        for x in range(cls.low, cls.high + 1):
            if membership_answer((yield Query.mem(x))):
                lo = x
                break
        if lo is None:
            if cls.contains_empty:
                return Empty()
            raise NoConsistentHypothesis(f"no point of {cls.class_id} is a member")
        hi = lo
        for x in range(lo + 1, cls.high + 1):
            if not membership_answer((yield Query.mem(x))):
                break
            hi = x
        return Interval(lo=lo, hi=hi)


class IntervalSupLearner(Learner):
    """Binary searches both ends with superset queries ``[mid, high]`` and ``[lo, mid]``."""

    concept_class: Intervals

    def protocol(self) -> Protocol:
        cls = self.concept_class
        if cls.contains_empty:
            if counterexample_point((yield Query.sup(Empty()))) is None:
                return Empty()

        a, b = cls.low, cls.high
        while a < b:
            mid = (a + b + 1) // 2
            if counterexample_point((yield Query.sup(Interval(lo=mid, hi=cls.high)))) is None:
                a = mid
            else:
                b = mid - 1
        lo = a

        a, b = lo, cls.high
        while a < b:
            mid = (a + b) // 2
            if counterexample_point((yield Query.sup(Interval(lo=lo, hi=mid)))) is None:
                b = mid
            else:
                a = mid + 1
        return Interval(lo=lo, hi=a)


class IntervalSubLearner(Learner):
    """Finds the lower end with unit-interval subset queries, then binary searches the upper end."""

    concept_class: Intervals

    def protocol(self) -> Protocol:
        cls = self.concept_class
        lo = None
        for x in range(cls.low, cls.high + 1):
            if counterexample_point((yield Query.sub(Interval(lo=x, hi=x)))) is None:
                lo = x
                break
        if lo is None:
            if cls.contains_empty:
                return Empty()
            raise NoConsistentHypothesis(f"no point of {cls.class_id} is a member")

        a, b = lo, cls.high
        while a < b:
            mid = (a + b + 1) // 2
            if counterexample_point((yield Query.sub(Interval(lo=lo, hi=mid)))) is None:
                a = mid
            else:
                b = mid - 1
        return Interval(lo=lo, hi=a)


class IntervalEqLearner(Learner):
    """Finds one member, then grows the hull of known members until the oracle agrees.

    Every query after the first member is a subset of the target, so each
    counterexample is positive and strictly widens the hull.
    """

    concept_class: Intervals

    def protocol(self) -> Protocol:
        cls = self.concept_class
        member = None
        if cls.contains_empty:
            member = counterexample_point((yield Query.eq(Empty())))
            if member is None:
                return Empty()
        else:
            for x in range(cls.low, cls.high + 1):
                y = counterexample_point((yield Query.eq(Interval(lo=x, hi=x))))
                if y is None:
                    return Interval(lo=x, hi=x)
                if y != x:
                    member = y
                    break
            if member is None:
                raise NoConsistentHypothesis(f"no point of {cls.class_id} is a member")

        a = b = member
        while True:
            y = counterexample_point((yield Query.eq(Interval(lo=a, hi=b))))
            if y is None:
                return Interval(lo=a, hi=b)
            if a <= y <= b:
                raise ProtocolViolation(f"negative counterexample {y} inside known members [{a},{b}]")
            a, b = min(a, y), max(b, y)


class IntervalPosLearner(Learner):
    """Collects positive examples until the oracle has none left."""

    concept_class: Intervals

    def protocol(self) -> Protocol:
        seen = []
        while True:
            x = positive_point((yield Query.pos()))
            if x is None:
                break
            seen.append(x)
        if not seen:
            if self.concept_class.contains_empty:
                return Empty()
            raise NoConsistentHypothesis("no positive example for a class without the empty concept")
        return Interval(lo=min(seen), hi=max(seen))


class HalvesPosLearner(Learner):
    """A single positive example tells the two halves apart."""

    concept_class: SignedHalves

    def protocol(self) -> Protocol:
        x = positive_point((yield Query.pos()))
        if x is None:
            raise ProtocolViolation("both halves are nonempty")
        return self.concept_class.non_negative if x >= 0 else self.concept_class.negative


class HalvesMemLearner(Learner):
    concept_class: SignedHalves

    def protocol(self) -> Protocol:
        cls = self.concept_class
        return cls.non_negative if membership_answer((yield Query.mem(0))) else cls.negative


class HalvesConceptQueryLearner(Learner):
    """Poses the non-negative half once; any counterexample means the negative half."""

    concept_class: SignedHalves
    query_factory: Callable[[ConceptDesc], Query]

    def protocol(self) -> Protocol:
        cls = self.concept_class
        x = counterexample_point((yield self.query_factory(cls.non_negative)))
        return cls.non_negative if x is None else cls.negative


class HalvesSupLearner(HalvesConceptQueryLearner):
    query_factory = staticmethod(Query.sup)


class HalvesSubLearner(HalvesConceptQueryLearner):
    query_factory = staticmethod(Query.sub)


class HalvesEqLearner(HalvesConceptQueryLearner):
    query_factory = staticmethod(Query.eq)


class FiniteSetMemLearner(Learner):
    concept_class: FiniteSets

    def protocol(self) -> Protocol:
        members = set()
        for x in self.concept_class.universe():
            if membership_answer((yield Query.mem(x))):
                members.add(x)
        return FiniteSet(elements=frozenset(members))


class FiniteSetSupLearner(Learner):
    """Grows the known members one counterexample at a time."""

    concept_class: FiniteSets

    def protocol(self) -> Protocol:
        known = frozenset()
        while True:
            x = counterexample_point((yield Query.sup(FiniteSet(elements=known))))
            if x is None:
                return FiniteSet(elements=known)
            if x in known:
                raise ProtocolViolation(f"superset counterexample {x} already known")
            known = known | {x}


class FiniteSetSubLearner(Learner):
    """Starts from the whole universe and drops every counterexample."""

    concept_class: FiniteSets

    def protocol(self) -> Protocol:
        candidates = frozenset(self.concept_class.universe())
        while True:
            x = counterexample_point((yield Query.sub(FiniteSet(elements=candidates))))
            if x is None:
                return FiniteSet(elements=candidates)
            if x not in candidates:
                raise ProtocolViolation(f"subset counterexample {x} outside the query")
            candidates = candidates - {x}


class FiniteSetEqLearner(Learner):
    concept_class: FiniteSets

    def protocol(self) -> Protocol:
        known = frozenset()
        while True:
            x = counterexample_point((yield Query.eq(FiniteSet(elements=known))))
            if x is None:
                return FiniteSet(elements=known)
            if x in known:
                raise ProtocolViolation(f"equivalence counterexample {x} is a known member")
            known = known | {x}


class FiniteSetPosLearner(Learner):
    concept_class: FiniteSets

    def protocol(self) -> Protocol:
        seen = set()
        while True:
            x = positive_point((yield Query.pos()))
            if x is None:
                return FiniteSet(elements=frozenset(seen))
            seen.add(x)


class LetterMemLearner(Learner):
    concept_class: LetterPairs

    def protocol(self) -> Protocol:
        return LetterPairs.LARGE if membership_answer((yield Query.mem("b"))) else LetterPairs.SMALL


class LetterSupLearner(Learner):
    concept_class: LetterPairs

    def protocol(self) -> Protocol:
        x = counterexample_point((yield Query.sup(LetterPairs.SMALL)))
        return LetterPairs.SMALL if x is None else LetterPairs.LARGE


class LetterSubLearner(Learner):
    concept_class: LetterPairs

    def protocol(self) -> Protocol:
        x = counterexample_point((yield Query.sub(LetterPairs.LARGE)))
        return LetterPairs.LARGE if x is None else LetterPairs.SMALL


class LetterEqLearner(Learner):
    concept_class: LetterPairs

    def protocol(self) -> Protocol:
        x = counterexample_point((yield Query.eq(LetterPairs.SMALL)))
        return LetterPairs.SMALL if x is None else LetterPairs.LARGE


class LetterPosLearner(Learner):
    """Two positive queries: ``b`` settles it, running out of examples without ``b`` means ``{a}``."""

    concept_class: LetterPairs

    def protocol(self) -> Protocol:
        while True:
            x = positive_point((yield Query.pos()))
            if x == "b":
                return LetterPairs.LARGE
            if x is None:
                return LetterPairs.SMALL


class PrefixMemLearner(Learner):
    """Walks down the target string; at each level the one excluded value is the next symbol."""

    concept_class: PrefixClass

    def protocol(self) -> Protocol:
        cls = self.concept_class
        t = ()
        while len(t) < cls.max_len:
            excluded = None
            for a in range(cls.size):
                if not membership_answer((yield Query.mem(Pair(t, a)))):
                    excluded = a
                    break
            if excluded is None:
                break
            t = t + (excluded,)
        return PrefixConcept(s=t)
