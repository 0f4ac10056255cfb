"""
Adversary for products of prefix classes, and the justifiability bookkeeping
that turns its answers into a query lower bound.

A product query is justifiable if every coordinate string is the empty
string, or if it extends a justifiably queried concept in one coordinate by
the fresh value the adversary returned there. The adversary never answers
Yes and always answers with fresh values, so every justifiable concept stays
consistent with the transcript until it has been queried itself.
"""

from collections import deque
from typing import Deque, Dict, Iterable, List, Optional, Set, Tuple
import logging
from src.concepts.classes import PrefixClass
from src.concepts.composite import ProductClass
from src.core.errors import (
    FreshValuesExhausted,
    NoConsistentHypothesis,
    PreconditionUnmet,
    ProtocolViolation,
    UniverseMismatch,
    UnsupportedQuery,
)
from src.core.learner import Learner, Protocol, counterexample_point
from src.core.oracle import Oracle
from src.models.concepts import Pair, PrefixConcept, ProductConcept, Vector
from src.models.queries import Answer, Counterexample, Query, QueryKind
from src.utils.concept_syntax import render_symbols

logger = logging.getLogger(__name__)

# One symbol string per product coordinate.
Strings = Tuple[Tuple[int, ...], ...]


def level_of(strings: Strings) -> int:
    """Sum of the coordinate string lengths."""
    return sum(len(s) for s in strings)


def as_concept(strings: Strings) -> ProductConcept:
    return ProductConcept(parts=tuple(PrefixConcept(s=s) for s in strings))


def as_strings(concept: ProductConcept) -> Strings:
    return tuple(part.s for part in concept.parts)


def _require_prefix_product(concept_class: ProductClass) -> None:
    if not isinstance(concept_class, ProductClass) or not all(
        isinstance(part, PrefixClass) for part in concept_class.parts
    ):
        raise UniverseMismatch(f"{concept_class.class_id} is not a product of prefix classes")


class FreshValueSource:
    """Issues values never seen before in any query or earlier answer."""

    def __init__(self, size: int, start: int = 1):
        """
        Initialize the source.

        Args:
            size: Universe bound U; every value must lie below it
            start: First candidate value
        """
        self.size = size
        self.next_value = start
        self.issued: Set[int] = set()
        self.seen: Set[int] = set()

    def observe(self, values: Iterable[int]) -> None:
        """Mark values that appeared in a query."""
        self.seen.update(values)

    def take(self) -> int:
        """
        Next fresh value.

        Raises:
            FreshValuesExhausted: If no fresh value is left below the universe bound
        """
        while self.next_value in self.issued or self.next_value in self.seen:
            self.next_value += 1
        if self.next_value >= self.size:
            raise FreshValuesExhausted(f"no fresh value below {self.size}")
        value = self.next_value
        self.issued.add(value)
        self.next_value += 1
        return value


class JustifiabilityLog:
    """Answered queries and the justifiable concepts they give rise to."""

    def __init__(self, k: int):
        """
        Initialize the log with the all-empty-strings concept justifiable.

        Args:
            k: Number of product coordinates
        """
        self.k = k
        self.root: Strings = ((),) * k
        self.answered: Dict[Strings, Vector] = {}
        self.justifiable: List[Strings] = [self.root]
        self.children: Dict[Strings, List[Strings]] = {}
        self._justifiable_set: Set[Strings] = {self.root}

    def is_justifiable(self, strings: Strings) -> bool:
        return strings in self._justifiable_set

    def record(self, strings: Strings, counterexample: Vector) -> List[Strings]:
        """
        Log an answered query.

        Args:
            strings: The queried concept
            counterexample: The answer's point, one ``(s_i, a_i)`` per coordinate

        Returns:
            Concepts that became justifiable through this answer
        """
        if strings in self.answered:
            return []
        self.answered[strings] = counterexample
        if not self.is_justifiable(strings):
            return []
        added = []
        for i, point in enumerate(counterexample):
            child = strings[:i] + (strings[i] + (point.value,),) + strings[i + 1 :]
            if child not in self._justifiable_set:
                self._justifiable_set.add(child)
                self.justifiable.append(child)
                added.append(child)
        self.children[strings] = added
        return added

    def at_level(self, r: int) -> List[Strings]:
        return [s for s in self.justifiable if level_of(s) == r]

    def unqueried(self) -> List[Strings]:
        return [s for s in self.justifiable if s not in self.answered]


def count_justifiable(log: JustifiabilityLog, r: int) -> int:
    """
    Number of justifiable concepts whose string lengths sum to ``r``.

    Args:
        log: Log of an adversarial prefix session
        r: Level to count

    Returns:
        The count; ``k ** r`` once every lower level has been queried

    Raises:
        PreconditionUnmet: If a justifiable concept below level ``r`` is unqueried
    """
    for strings in log.justifiable:
        if level_of(strings) < r and strings not in log.answered:
            raise PreconditionUnmet(
                f"justifiable concept at level {level_of(strings)} has not been queried"
            )
    return len(log.at_level(r))


class AdversarialPrefixOracle(Oracle):
    """Answers every Sub or EQ query with fresh values and never says Yes."""

    concept_class: ProductClass

    def __init__(self, concept_class: ProductClass):
        """
        Initialize the adversary.

        Args:
            concept_class: Product of prefix classes

        Raises:
            UniverseMismatch: If a component is not a prefix class
        """
        _require_prefix_product(concept_class)
        super().__init__(concept_class)
        self.log = JustifiabilityLog(concept_class.k)
        self.fresh = FreshValueSource(min(part.size for part in concept_class.parts))
        self._memo: Dict[Strings, Vector] = {}

    def answer(self, query: Query) -> Answer:
        if query.kind not in (QueryKind.SUB, QueryKind.EQ):
            raise UnsupportedQuery(
                f"the prefix adversary answers Sub and EQ, not {query.kind.value}"
            )
        strings = as_strings(self.concept_class.validate_concept(query.concept))
        if strings in self._memo:
            return Counterexample(point=self._memo[strings])

        self.fresh.observe(a for s in strings for a in s)
        x = Vector(Pair(s, self.fresh.take()) for s in strings)
        self._memo[strings] = x
        added = self.log.record(strings, x)
        if added:
            logger.debug(f"{len(added)} concepts became justifiable at level {level_of(strings) + 1}")
        return Counterexample(point=x)


class BreadthFirstPrefixLearner(Learner):
    """Queries justifiable concepts level by level, deriving them from its own transcript."""

    concept_class: ProductClass

    def __init__(self, concept_class: ProductClass, kind: QueryKind = QueryKind.SUB):
        _require_prefix_product(concept_class)
        if kind not in (QueryKind.SUB, QueryKind.EQ):
            raise ValueError(f"breadth-first learner poses Sub or EQ queries, not {kind.value}")
        super().__init__(concept_class)
        self.kind = kind
        self.log = JustifiabilityLog(concept_class.k)

    def protocol(self) -> Protocol:
        max_lens = [part.max_len for part in self.concept_class.parts]
        frontier: Deque[Strings] = deque([self.log.root])
        while frontier:
            strings = frontier.popleft()
            if any(len(s) > n for s, n in zip(strings, max_lens)):
                continue
            concept = as_concept(strings)
            x = counterexample_point((yield Query.with_concept(self.kind, concept)))
            if x is None:
                return concept
            if len(x) != len(strings) or any(xi.prefix != s for xi, s in zip(x, strings)):
                rendered = self.concept_class.render_point(x)
                raise ProtocolViolation(f"counterexample {rendered} does not sit on the queried strings")
            frontier.extend(self.log.record(strings, x))
        raise NoConsistentHypothesis("justifiable concepts exceed the maximum string length")


def consistency_certificate(
    log: JustifiabilityLog, concept_class: ProductClass
) -> Optional[ProductConcept]:
    """
    An unqueried justifiable concept consistent with every logged answer.

    Every answered query Q with counterexample x is replayed against the
    candidate T: x must lie in Q and outside T, which makes the answer valid
    for both Sub and EQ.

    Args:
        log: Log of an adversarial prefix session
        concept_class: The product of prefix classes queried

    Returns:
        The first such concept in breadth-first order, or None
    """
    for strings in log.unqueried():
        candidate = as_concept(strings)
        if not concept_class.is_concept(candidate):
            continue
        if all(
            concept_class.contains(as_concept(queried), x)
            and not concept_class.contains(candidate, x)
            for queried, x in log.answered.items()
        ):
            return candidate
    return None


def render_tree(log: JustifiabilityLog, concept_class: ProductClass) -> List[str]:
    """
    Render the tree of justifiable concepts.

    Each node is a concept with its counterexample; each edge is labeled with
    the inference ``w·a ≤ s_i`` that made the child justifiable.

    Returns:
        Indented lines, root first
    """
    lines: List[str] = []

    def visit(strings: Strings, depth: int, edge: str) -> None:
        label = concept_class.render_concept(as_concept(strings))
        if strings in log.answered:
            label += f" -> {concept_class.render_point(log.answered[strings])}"
        else:
            label += " (unqueried)"
        lines.append("  " * depth + edge + label)
        for child in log.children.get(strings, []):
            i = next(i for i, (a, b) in enumerate(zip(strings, child)) if a != b)
            visit(child, depth + 1, f'["{render_symbols(child[i])}" ≤ s{i + 1}] ')

    visit(log.root, 0, "")
    return lines
