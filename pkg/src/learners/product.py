"""
Combinators that learn cross-products by simulating one sublearner per component.

Each combinator is itself a learner: it poses product-level queries to the
real oracle and acts as the oracle of its sublearners, translating every
product answer into correct component answers.
"""

from collections import deque
from itertools import product
from typing import Any, Deque, Dict, Generator, List, Optional, Sequence, Set
import logging
from src.concepts.composite import ProductClass
from src.concepts.profile import negative_profile
from src.core.errors import (
    EmptyConceptClass,
    InvalidPositiveExample,
    NoConsistentHypothesis,
    ProtocolViolation,
    UniverseMismatch,
)
from src.core.learner import (
    Learner,
    Protocol,
    SublearnerSpec,
    counterexample_point,
    membership_answer,
    positive_point,
)
from src.core.oracle import Oracle
from src.core.session import run_session
from src.models.concepts import ConceptDesc, Empty, ProductConcept, Vector
from src.models.queries import (
    Counterexample,
    No,
    NoSuchExample,
    Positive,
    Query,
    QueryKind,
    SessionResult,
    Yes,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1_000_000


class ProductLearner(Learner):
    """Shared plumbing of the product combinators."""

    concept_class: ProductClass
    sub_kind: Optional[QueryKind] = None

    def __init__(self, concept_class: ProductClass, subs: Sequence[SublearnerSpec]):
        """
        Initialize the combinator.

        Args:
            concept_class: Product class to learn in
            subs: One sublearner spec per component, in component order

        Raises:
            UniverseMismatch: If the specs do not match the components
        """
        if len(subs) != concept_class.k:
            raise UniverseMismatch(f"{concept_class.k} components but {len(subs)} sublearners")
        for part, spec in zip(concept_class.parts, subs):
            if spec.concept_class.class_id != part.class_id:
                raise UniverseMismatch(
                    f"sublearner for {spec.concept_class.class_id} cannot learn {part.class_id}"
                )
            if self.sub_kind is not None and spec.query_kind != self.sub_kind:
                raise ValueError(
                    f"{self.__class__.__name__} needs {self.sub_kind.value} sublearners, "
                    f"got {spec.query_kind.value}"
                )
        super().__init__(concept_class)
        self.subs = list(subs)
        self._mem_cache: Dict[Vector, bool] = {}

    def _spawn_all(self) -> List[Learner]:
        learners = [spec.spawn() for spec in self.subs]
        for learner in learners:
            learner.start()
        return learners

    def _current(self, j: int, learner: Learner) -> ConceptDesc:
        """S_j: the pending sub-query's concept, or the frozen hypothesis."""
        if learner.finished:
            return learner.hypothesis
        query = learner.pending
        if query.concept is None or (self.sub_kind is not None and query.kind != self.sub_kind):
            raise ProtocolViolation(
                f"sublearner {j} asked a {query.kind.value} query inside a concept-query combinator"
            )
        return query.concept

    def _credit(self, j: int, learner: Learner, x: Any) -> None:
        if learner.finished:
            raise ProtocolViolation(f"counterexample attributed to finished dimension {j}")
        logger.debug(f"dimension {j} receives counterexample {self.concept_class.parts[j].render_point(x)}")
        learner.feed(Counterexample(point=x))

    def _ask_mem(self, x: Vector) -> Generator[Query, Any, bool]:
        if x in self._mem_cache:
            return self._mem_cache[x]
        answer = membership_answer((yield Query.mem(x)))
        self._mem_cache[x] = answer
        return answer

    def _obtain_positive(self, given: Optional[Vector]) -> Generator[Query, Any, Optional[Vector]]:
        if given is not None:
            return self.concept_class.validate_point(Vector(given))
        p = positive_point((yield Query.one_pos()))
        if p is None:
            return None
        logger.info(f"positive example {self.concept_class.render_point(p)} obtained from the oracle")
        return p

    def _check_positive(self, p: Vector, hypotheses: Sequence[ConceptDesc]) -> ProductConcept:
        hypothesis = ProductConcept(parts=tuple(hypotheses))
        if not self.concept_class.contains(hypothesis, p):
            raise InvalidPositiveExample(
                f"{self.concept_class.render_point(p)} is not a member of the learned target"
            )
        return hypothesis

    def _mem_pos_phase(self, p: Vector) -> Generator[Query, Any, ProductConcept]:
        """Run each Mem sublearner in turn, answering M at dimension j with Mem(p[j <- M])."""
        hypotheses = []
        for j, spec in enumerate(self.subs):
            learner = spec.spawn()
            event = learner.start()
            while not learner.finished:
                query = event.query
                if query.kind != QueryKind.MEM:
                    raise ProtocolViolation(f"sublearner {j} asked {query.kind.value}, expected Mem")
                answer = yield from self._ask_mem(p.replace(j, query.point))
                try:
                    event = learner.feed(Yes() if answer else No())
                except NoConsistentHypothesis as e:
                    raise InvalidPositiveExample(
                        f"{self.concept_class.render_point(p)} is not a positive example: {e}"
                    ) from e
            hypotheses.append(learner.hypothesis)
        return self._check_positive(p, hypotheses)


class SupProductLearner(ProductLearner):
    """Learns a product from superset queries.

    Every product query answers at least one sublearner: a Yes answers all
    of them, and a counterexample goes to each dimension it falls outside of.
    """

    sub_kind = QueryKind.SUP

    def protocol(self) -> Protocol:
        cls = self.concept_class
        learners = self._spawn_all()

        if cls.contains_empty:
            x = counterexample_point((yield Query.sup(Empty())))
            if x is None:
                return Empty()
            self._forward(learners, x)

        while not all(learner.finished for learner in learners):
            current = [self._current(j, learner) for j, learner in enumerate(learners)]
            x = counterexample_point((yield Query.sup(ProductConcept(parts=tuple(current)))))
            if x is None:
                for learner in learners:
                    if not learner.finished:
                        learner.feed(Yes())
            elif self._forward(learners, x) == 0:
                raise ProtocolViolation(
                    f"superset counterexample {cls.render_point(x)} lies inside the query"
                )
        return ProductConcept(parts=tuple(learner.hypothesis for learner in learners))

    def _forward(self, learners: List[Learner], x: Vector) -> int:
        credited = 0
        for j, (part, learner) in enumerate(zip(self.concept_class.parts, learners)):
            if not part.contains(self._current(j, learner), x[j]):
                self._credit(j, learner, x[j])
                credited += 1
        return credited


class CounterexampleProductLearner(ProductLearner):
    """Learns a product from EQ or Sub queries, membership queries and one positive example.

    Positive counterexamples are attributed by checking which coordinates
    fall outside the query; negative ones by asking whether the positive
    example with one coordinate swapped in is still a member.

    A given positive example is not checked with Mem up front. A false one
    surfaces as a negative counterexample no coordinate can be blamed for, or
    as a final hypothesis that excludes it; both raise
    InvalidPositiveExample.
    """

    def __init__(
        self,
        concept_class: ProductClass,
        subs: Sequence[SublearnerSpec],
        kind: QueryKind,
        positive_example: Optional[Vector] = None,
    ):
        """
        Initialize the combinator.

        Args:
            concept_class: Product class to learn in
            subs: EQ or Sub sublearner specs, one per component
            kind: EQ or Sub, matching the sublearners
            positive_example: A member of the target; obtained with one
                1Pos query when omitted
        """
        if kind not in (QueryKind.EQ, QueryKind.SUB):
            raise ValueError(f"counterexample combinator poses EQ or Sub queries, not {kind.value}")
        self.sub_kind = kind
        super().__init__(concept_class, subs)
        self.kind = kind
        self.positive_example = positive_example

    def protocol(self) -> Protocol:
        cls = self.concept_class
        p = yield from self._obtain_positive(self.positive_example)
        if p is None:
            if cls.contains_empty:
                return Empty()
            raise ProtocolViolation("no positive example exists for a class without the empty concept")

        learners = self._spawn_all()
        while not all(learner.finished for learner in learners):
            self._settle_empty_subset_queries(learners)
            if all(learner.finished for learner in learners):
                break
            current = [self._current(j, learner) for j, learner in enumerate(learners)]
            query_concept = ProductConcept(parts=tuple(current))
            x = counterexample_point((yield Query.with_concept(self.kind, query_concept)))
            if x is None:
                for learner in learners:
                    if not learner.finished:
                        learner.feed(Yes())
                continue

            if not cls.contains(query_concept, x):
                if self.kind == QueryKind.SUB:
                    raise ProtocolViolation(
                        f"subset counterexample {cls.render_point(x)} lies outside the query"
                    )
                for j, (part, learner) in enumerate(zip(cls.parts, learners)):
                    if not part.contains(current[j], x[j]):
                        self._credit(j, learner, x[j])
                continue

            credited = 0
            for j, learner in enumerate(learners):
                if learner.finished or x[j] == p[j]:
                    continue
                if not (yield from self._ask_mem(p.replace(j, x[j]))):
                    self._credit(j, learner, x[j])
                    credited += 1
            if credited == 0:
                raise InvalidPositiveExample(
                    f"negative counterexample {cls.render_point(x)} is unattributable through "
                    f"{cls.render_point(p)}"
                )

        return self._check_positive(p, [learner.hypothesis for learner in learners])

    def _settle_empty_subset_queries(self, learners: List[Learner]) -> None:
        # The empty set is a subset of every component target.
        if self.kind != QueryKind.SUB:
            return
        for j, (part, learner) in enumerate(zip(self.concept_class.parts, learners)):
            while not learner.finished and part.is_empty(self._current(j, learner)):
                learner.feed(Yes())


class MemPosProductLearner(ProductLearner):
    """Learns a product from membership queries and one positive example, one dimension at a time."""

    sub_kind = QueryKind.MEM

    def __init__(
        self,
        concept_class: ProductClass,
        subs: Sequence[SublearnerSpec],
        positive_example: Optional[Vector] = None,
    ):
        super().__init__(concept_class, subs)
        self.positive_example = positive_example

    def protocol(self) -> Protocol:
        p = yield from self._obtain_positive(self.positive_example)
        if p is None:
            if self.concept_class.contains_empty:
                return Empty()
            raise ProtocolViolation("no positive example exists for a class without the empty concept")
        return (yield from self._mem_pos_phase(p))


class MemOnlyProductLearner(ProductLearner):
    """Learns a product from membership queries alone.

    Each component's pool grows along the points its sublearner asks when
    every answer is negative, seeded with a member of the concept that
    sequence ends on. The product of the pools is searched for a positive
    point; once found, learning continues as with a given positive example.
    Answers are cached, so every product point is asked at most once.
    """

    sub_kind = QueryKind.MEM

    def __init__(self, concept_class: ProductClass, subs: Sequence[SublearnerSpec]):
        """
        Initialize the combinator.

        Raises:
            EmptyConceptClass: If any component class contains the empty concept
        """
        for part in concept_class.parts:
            if part.contains_empty:
                raise EmptyConceptClass(
                    f"{part.class_id} contains the empty concept; membership queries alone "
                    "cannot tell an empty product apart"
                )
        super().__init__(concept_class, subs)

    def protocol(self) -> Protocol:
        profiles = [negative_profile(spec) for spec in self.subs]
        pools: List[List[Any]] = []
        for j, profile in enumerate(profiles):
            pools.append([profile.witness] if profile.fallback is not None else [])
            if profile.fallback is not None:
                logger.info(
                    f"dimension {j} seeded with {self.concept_class.parts[j].render_point(profile.witness)}"
                )

        round_ = 0
        while True:
            remaining = False
            for pool, profile in zip(pools, profiles):
                if round_ < len(profile.queries):
                    remaining = True
                    if profile.queries[round_] not in pool:
                        pool.append(profile.queries[round_])
            for coords in product(*pools):
                x = Vector(coords)
                if x in self._mem_cache:
                    continue
                if (yield from self._ask_mem(x)):
                    logger.info(
                        f"positive point {self.concept_class.render_point(x)} found in round {round_}"
                    )
                    return (yield from self._mem_pos_phase(x))
            if not remaining:
                raise NoConsistentHypothesis("search pools are exhausted without a positive point")
            round_ += 1


class PosProductLearner(ProductLearner):
    """Forwards each fresh coordinate of a product positive example to its sublearner.

    Coordinates that were already delivered carry no information, so an
    oracle that keeps repeating one coordinate starves that sublearner.
    """

    sub_kind = QueryKind.POS

    def protocol(self) -> Protocol:
        learners = self._spawn_all()
        queues: List[Deque[Any]] = [deque() for _ in learners]
        seen: List[Set[Any]] = [set() for _ in learners]

        while not all(learner.finished for learner in learners):
            delivered = False
            for j, learner in enumerate(learners):
                if learner.finished:
                    continue
                if learner.pending.kind != QueryKind.POS:
                    raise ProtocolViolation(f"sublearner {j} asked {learner.pending.kind.value}")
                if queues[j]:
                    learner.feed(Positive(point=queues[j].popleft()))
                    delivered = True
            if delivered:
                continue

            x = positive_point((yield Query.pos()))
            if x is None:
                for learner in learners:
                    if not learner.finished:
                        learner.feed(NoSuchExample())
                continue
            for j, xj in enumerate(x):
                if xj not in seen[j]:
                    seen[j].add(xj)
                    queues[j].append(xj)
        return ProductConcept(parts=tuple(learner.hypothesis for learner in learners))


def _product_class(oracle: Oracle) -> ProductClass:
    if not isinstance(oracle.concept_class, ProductClass):
        raise UniverseMismatch(f"{oracle.concept_class.class_id} is not a product class")
    return oracle.concept_class


def learn_product_sup(
    subs: Sequence[SublearnerSpec], oracle: Oracle, budget: int = DEFAULT_BUDGET
) -> SessionResult:
    """Learn a product target from superset queries."""
    return run_session(SupProductLearner(_product_class(oracle), subs), oracle, budget)


def learn_product_cex_mem_pos(
    subs: Sequence[SublearnerSpec],
    oracle: Oracle,
    p: Optional[Vector] = None,
    mode: QueryKind = QueryKind.EQ,
    budget: int = DEFAULT_BUDGET,
) -> SessionResult:
    """Learn a product target from EQ or Sub queries plus Mem and one positive example."""
    learner = CounterexampleProductLearner(_product_class(oracle), subs, mode, p)
    return run_session(learner, oracle, budget)


def learn_product_mem_pos(
    subs: Sequence[SublearnerSpec],
    oracle: Oracle,
    p: Optional[Vector] = None,
    budget: int = DEFAULT_BUDGET,
) -> SessionResult:
    """Learn a product target from Mem queries and one positive example."""
    return run_session(MemPosProductLearner(_product_class(oracle), subs, p), oracle, budget)


def learn_product_mem_only(
    subs: Sequence[SublearnerSpec], oracle: Oracle, budget: int = DEFAULT_BUDGET
) -> SessionResult:
    """Learn a product target from Mem queries alone."""
    return run_session(MemOnlyProductLearner(_product_class(oracle), subs), oracle, budget)


def learn_product_pos(
    subs: Sequence[SublearnerSpec], oracle: Oracle, budget: int = DEFAULT_BUDGET
) -> SessionResult:
    """Naive positive-example product learner; does not terminate against an adversary."""
    return run_session(PosProductLearner(_product_class(oracle), subs), oracle, budget)
