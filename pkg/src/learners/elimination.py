"""
Brute-force elimination learner for products of singleton classes.
"""

import logging
from src.concepts.classes import Singletons
from src.concepts.composite import ProductClass
from src.core.errors import ProtocolViolation, UniverseMismatch
from src.core.learner import Learner, Protocol, counterexample_point, membership_answer
from src.models.concepts import ProductConcept, Singleton, Vector
from src.models.queries import Query, QueryKind

logger = logging.getLogger(__name__)


def singleton_concept(x: Vector) -> ProductConcept:
    """The product of singletons whose only member is ``x``."""
    return ProductConcept(parts=tuple(Singleton(j=xi) for xi in x))


class EliminationLearner(Learner):
    """Asks about one surviving candidate at a time until a single one is left.

    Works with Mem, Sub and EQ queries; a positive EQ counterexample names the
    target directly.
    """

    concept_class: ProductClass

    def __init__(self, concept_class: ProductClass, kind: QueryKind):
        if not all(isinstance(part, Singletons) for part in concept_class.parts):
            raise UniverseMismatch(f"{concept_class.class_id} is not a product of singleton classes")
        if kind not in (QueryKind.MEM, QueryKind.SUB, QueryKind.EQ):
            raise ValueError(f"elimination learner does not pose {kind.value} queries")
        super().__init__(concept_class)
        self.kind = kind

    def protocol(self) -> Protocol:
        candidates = list(self.concept_class.universe())
        while len(candidates) > 1:
            x = candidates[0]
            concept = singleton_concept(x)
            if self.kind == QueryKind.MEM:
                if membership_answer((yield Query.mem(x))):
                    return concept
                candidates.pop(0)
                continue

            y = counterexample_point((yield Query.with_concept(self.kind, concept)))
            if y is None:
                return concept
            if y == x:
                candidates.pop(0)
            elif self.kind == QueryKind.EQ:
                return singleton_concept(y)
            else:
                raise ProtocolViolation(f"subset counterexample {y} outside the query {x}")
        logger.debug(f"one candidate left after elimination: {candidates[0]}")
        return singleton_concept(candidates[0])
