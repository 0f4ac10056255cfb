"""
Adversary against positive-example learners of the letters-by-halves product.
"""

from typing import Iterable, List
import logging
from src.concepts.base import ConceptClass
from src.concepts.composite import PairDemo
from src.core.errors import UniverseExhausted, UnsupportedQuery
from src.core.oracle import Oracle
from src.models.concepts import ConceptDesc, Vector
from src.models.queries import Answer, Positive, Query, QueryKind

logger = logging.getLogger(__name__)


class AdversarialPosOracle(Oracle):
    """Hands out ``(a, 0), (a, 1), ...`` and never shows ``b``.

    Every answer is a member of both ``{a} x [0, U)`` and ``{a, b} x [0, U)``,
    so no number of answers separates the two.
    """

    concept_class: PairDemo

    def __init__(self, concept_class: PairDemo):
        super().__init__(concept_class)
        self.issued: List[Vector] = []

    def answer(self, query: Query) -> Answer:
        if query.kind != QueryKind.POS:
            raise UnsupportedQuery(
                f"the positive-example adversary only answers Pos, not {query.kind.value}"
            )
        n = len(self.issued)
        if n >= self.concept_class.size:
            raise UniverseExhausted(f"all {n} non-negative values have been issued")
        x = Vector(("a", n))
        self.issued.append(x)
        logger.debug(f"adversarial Pos answer {self.concept_class.render_point(x)}")
        return Positive(point=x)


def consistent_concepts(concept_class: ConceptClass, positives: Iterable) -> List[ConceptDesc]:
    """
    Every concept of the class that contains all the given points.

    Args:
        concept_class: Finite class to enumerate
        positives: Points reported as positive examples

    Returns:
        Consistent concepts in enumeration order
    """
    points = list(positives)
    return [
        c for c in concept_class.concepts() if all(concept_class.contains(c, x) for x in points)
    ]
