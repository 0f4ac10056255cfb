"""
Adversary for products of singleton classes.
"""

from typing import List
import logging
from src.concepts.classes import Singletons
from src.concepts.composite import ProductClass
from src.core.errors import UnsupportedQuery
from src.core.oracle import Oracle
from src.models.concepts import Vector
from src.models.queries import Answer, Counterexample, No, Query, QueryKind, Yes

logger = logging.getLogger(__name__)


class AdversarialSingletonOracle(Oracle):
    """Rules out exactly the queried candidate while two or more remain.

    Mem answers No; Sub and EQ return the queried point itself. Once one
    candidate is left the oracle answers honestly for it, so any learner
    needs ``(m+1)^k - 1`` queries before the target is pinned.
    """

    concept_class: ProductClass

    def __init__(self, m: int, k: int):
        """
        Initialize the adversary.

        Args:
            m: Largest singleton value
            k: Number of components
        """
        super().__init__(ProductClass([Singletons(m) for _ in range(k)]))
        self.candidates: List[Vector] = list(self.concept_class.universe())

    @property
    def consistent_count(self) -> int:
        return len(self.candidates)

    @property
    def committed(self) -> bool:
        return len(self.candidates) == 1

    @property
    def target(self) -> Vector:
        """The candidate the adversary is held to: the last survivor in canonical order."""
        return self.candidates[-1]

    def answer(self, query: Query) -> Answer:
        cls = self.concept_class
        if query.kind == QueryKind.MEM:
            x = cls.validate_point(query.point)
        elif query.kind in (QueryKind.SUB, QueryKind.EQ):
            concept = cls.validate_concept(query.concept)
            x = Vector(part.j for part in concept.parts)
        else:
            raise UnsupportedQuery(
                f"the singleton adversary answers Mem, Sub and EQ, not {query.kind.value}"
            )

        if self.committed:
            hit = x == self.target
            if query.kind == QueryKind.MEM:
                return Yes() if hit else No()
            return Yes() if hit else Counterexample(point=x)

        if x in self.candidates:
            self.candidates.remove(x)
            logger.debug(f"ruled out {cls.render_point(x)}; {len(self.candidates)} candidates remain")
        if query.kind == QueryKind.MEM:
            return No()
        return Counterexample(point=x)
