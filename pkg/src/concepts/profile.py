"""
All-negative profile of a membership learner.

Feeding a membership learner nothing but negative answers either drives it to
a hypothesis N (the concept it settles on when it never sees a member) or
leaves it stuck. The product learner that only has membership queries uses
the resulting sequence of query points to grow its search pools.
"""

from typing import Any, List, Optional, Tuple
import logging
from pydantic import BaseModel, ConfigDict
from src.core.errors import ModularLearningError
from src.core.learner import SublearnerSpec
from src.models.concepts import ConceptDesc
from src.models.queries import Done, No, QueryKind

logger = logging.getLogger(__name__)


class NegativeProfile(BaseModel):
    """Trace of a membership learner that was answered No to every query."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    queries: Tuple[Any, ...] = ()
    hypothesis: Optional[ConceptDesc] = None
    witness: Optional[Any] = None

    @property
    def fallback(self) -> Optional[Tuple[ConceptDesc, Any]]:
        if self.hypothesis is None or self.witness is None:
            return None
        return self.hypothesis, self.witness


def negative_profile(spec: SublearnerSpec) -> NegativeProfile:
    """
    Replay a membership learner against an oracle that always answers No.

    Args:
        spec: The class's reference membership-query learner

    Returns:
        NegativeProfile with the queried points in order, and the hypothesis
        with its least member when the learner terminates consistently
    """
    if spec.query_kind != QueryKind.MEM:
        raise ValueError(f"negative profiles need a Mem learner, got {spec.query_kind.value}")

    concept_class = spec.concept_class
    limit = sum(1 for _ in concept_class.universe())
    learner = spec.spawn()
    queries: List[Any] = []
    try:
        event = learner.start()
        while not isinstance(event, Done):
            if len(queries) > limit:
                logger.info(f"{concept_class.class_id}: all-negative sequence does not terminate")
                return NegativeProfile(queries=tuple(queries))
            queries.append(event.query.point)
            event = learner.feed(No())
    except ModularLearningError as e:
        logger.info(f"{concept_class.class_id}: no concept is consistent with all-negative answers ({e})")
        return NegativeProfile(queries=tuple(queries))

    hypothesis = event.hypothesis
    if any(concept_class.contains(hypothesis, x) for x in queries):
        return NegativeProfile(queries=tuple(queries))
    return NegativeProfile(
        queries=tuple(queries), hypothesis=hypothesis, witness=concept_class.witness(hypothesis)
    )


def all_negative_profile(spec: SublearnerSpec) -> Optional[Tuple[ConceptDesc, Any]]:
    """
    Hypothesis N and its witness n reached by the all-negative query sequence.

    Args:
        spec: The class's reference membership-query learner

    Returns:
        ``(N, witness(N))``, or None when the sequence yields no nonempty concept
    """
    return negative_profile(spec).fallback
