"""
Sublearner factory for choosing the reference learner of a component class.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple, Type
import logging
from src.concepts.base import ConceptClass
from src.concepts.classes import (
    FiniteSets,
    Intervals,
    LetterPairs,
    PrefixClass,
    SignedHalves,
    Singletons,
)
from src.core.errors import UnsupportedQuery
from src.core.learner import Learner, SublearnerSpec
from src.learners import reference
from src.learners.prefix import prefix_eq_learner, prefix_sub_learner
from src.models.queries import QueryKind

logger = logging.getLogger(__name__)

LearnerType = Callable[[ConceptClass], Learner]

REFERENCE_LEARNERS: Dict[Tuple[Type[ConceptClass], QueryKind], LearnerType] = {
    (Singletons, QueryKind.MEM): reference.SingletonMemLearner,
    (Singletons, QueryKind.SUP): reference.SingletonSupLearner,
    (Singletons, QueryKind.SUB): reference.SingletonSubLearner,
    (Singletons, QueryKind.EQ): reference.SingletonEqLearner,
    (Singletons, QueryKind.POS): reference.SingletonPosLearner,
    (Intervals, QueryKind.MEM): reference.IntervalMemLearner,
    (Intervals, QueryKind.SUP): reference.IntervalSupLearner,
    (Intervals, QueryKind.SUB): reference.IntervalSubLearner,
    (Intervals, QueryKind.EQ): reference.IntervalEqLearner,
    (Intervals, QueryKind.POS): reference.IntervalPosLearner,
    (SignedHalves, QueryKind.MEM): reference.HalvesMemLearner,
    (SignedHalves, QueryKind.SUP): reference.HalvesSupLearner,
    (SignedHalves, QueryKind.SUB): reference.HalvesSubLearner,
    (SignedHalves, QueryKind.EQ): reference.HalvesEqLearner,
    (SignedHalves, QueryKind.POS): reference.HalvesPosLearner,
    (FiniteSets, QueryKind.MEM): reference.FiniteSetMemLearner,
    (FiniteSets, QueryKind.SUP): reference.FiniteSetSupLearner,
    (FiniteSets, QueryKind.SUB): reference.FiniteSetSubLearner,
    (FiniteSets, QueryKind.EQ): reference.FiniteSetEqLearner,
    (FiniteSets, QueryKind.POS): reference.FiniteSetPosLearner,
    (LetterPairs, QueryKind.MEM): reference.LetterMemLearner,
    (LetterPairs, QueryKind.SUP): reference.LetterSupLearner,
    (LetterPairs, QueryKind.SUB): reference.LetterSubLearner,
    (LetterPairs, QueryKind.EQ): reference.LetterEqLearner,
    (LetterPairs, QueryKind.POS): reference.LetterPosLearner,
    (PrefixClass, QueryKind.MEM): reference.PrefixMemLearner,
    (PrefixClass, QueryKind.SUB): prefix_sub_learner,
    (PrefixClass, QueryKind.EQ): prefix_eq_learner,
}


class SublearnerFactory:
    """Pairs component classes with the learner used for them."""

    def __init__(self, registry: Optional[Dict[Tuple[Type[ConceptClass], QueryKind], LearnerType]] = None):
        """
        Initialize the sublearner factory.

        Args:
            registry: Mapping from (class type, query kind) to learner type;
                defaults to the reference learners
        """
        self.registry = dict(REFERENCE_LEARNERS if registry is None else registry)

    def create(self, concept_class: ConceptClass, kind: QueryKind) -> SublearnerSpec:
        """
        Create the sublearner spec for one component.

        Args:
            concept_class: Component concept class
            kind: Query kind the sublearner poses

        Returns:
            SublearnerSpec ready to spawn learners

        Raises:
            UnsupportedQuery: If no learner is registered for the pair
        """
        learner_type = self.registry.get((type(concept_class), kind))
        if learner_type is None:
            raise UnsupportedQuery(f"no {kind.value} learner for {concept_class.class_id}")
        name = getattr(learner_type, "__name__", learner_type)
        logger.debug(f"Using {name} for {concept_class.class_id}")
        return SublearnerSpec(
            concept_class=concept_class, query_kind=kind, learner_type=learner_type
        )

    def create_all(self, parts: Sequence[ConceptClass], kind: QueryKind) -> List[SublearnerSpec]:
        """Specs for every component of a product or union."""
        return [self.create(part, kind) for part in parts]


default_factory = SublearnerFactory()


def reference_spec(concept_class: ConceptClass, kind: QueryKind) -> SublearnerSpec:
    """Reference sublearner spec for ``concept_class`` answering ``kind`` queries."""
    return default_factory.create(concept_class, kind)
