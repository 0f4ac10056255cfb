"""
Consistency finders: return a concept agreeing with every labeled point, or None.
"""

from abc import ABC, abstractmethod
from typing import Any, Optional, Sequence, Tuple
import logging
from src.concepts.base import ConceptClass
from src.concepts.classes import Intervals
from src.models.concepts import ClassId, ConceptDesc, Empty, Interval

logger = logging.getLogger(__name__)

Labels = Sequence[Tuple[Any, bool]]


class ConsistencyFinder(ABC):
    """Abstract base class for per-component consistency finders."""

    def __init__(self, concept_class: ConceptClass, vc_dim: int):
        """
        Initialize the finder.

        Args:
            concept_class: Class the finder searches
            vc_dim: VC dimension of that class, used for growth-function bounds
        """
        self.concept_class = concept_class
        self.vc_dim = vc_dim

    @property
    def class_id(self) -> ClassId:
        return self.concept_class.class_id

    @abstractmethod
    def find(
        self, labeled: Labels, epsilon: Optional[float] = None, delta: Optional[float] = None
    ) -> Optional[ConceptDesc]:
        """
        Find a concept consistent with ``labeled``.

        Args:
            labeled: (point, label) pairs
            epsilon: Accuracy parameter handed down by the caller; exact finders ignore it
            delta: Confidence parameter handed down by the caller; exact finders ignore it

        Returns:
            A consistent concept, or None when the class has none
        """
        pass

    def consistent(self, c: ConceptDesc, labeled: Labels) -> bool:
        return all(self.concept_class.contains(c, x) == label for x, label in labeled)


class IntervalFinder(ConsistencyFinder):
    """Hull rule: the least interval covering the positives, if it avoids every negative."""

    def __init__(self, concept_class: Intervals):
        super().__init__(concept_class, vc_dim=2)

    def find(self, labeled, epsilon=None, delta=None):
        positives = [x for x, label in labeled if label]
        negatives = {x for x, label in labeled if not label}
        if positives:
            hull = Interval(lo=min(positives), hi=max(positives))
            if any(hull.lo <= x <= hull.hi for x in negatives):
                return None
            return hull
        if self.concept_class.contains_empty:
            return Empty()
        free = next((x for x in self.concept_class.universe() if x not in negatives), None)
        return None if free is None else Interval(lo=free, hi=free)


class EnumerationFinder(ConsistencyFinder):
    """Brute force over every concept of a finite class, in enumeration order."""

    def __init__(self, concept_class: ConceptClass, vc_dim: int = 1):
        super().__init__(concept_class, vc_dim)
        self._concepts = list(concept_class.concepts())

    def find(self, labeled, epsilon=None, delta=None):
        return next((c for c in self._concepts if self.consistent(c, labeled)), None)


def finder_for(concept_class: ConceptClass, vc_dim: int = 1) -> ConsistencyFinder:
    """Hull finder for plain interval classes, enumeration for everything else."""
    if type(concept_class) is Intervals:
        return IntervalFinder(concept_class)
    return EnumerationFinder(concept_class, vc_dim)
