"""
Abstract concept class over a bounded universe.
"""

from abc import ABC, abstractmethod
from typing import Any, Iterator, Optional
import logging
from src.core.errors import UniverseMismatch
from src.models.concepts import ClassId, ConceptDesc
from src.utils.concept_syntax import render_concept, render_point

logger = logging.getLogger(__name__)


class ConceptClass(ABC):
    """A family of concepts with decidable membership over a finite universe.

    ``members`` and ``universe`` enumerate in the class's canonical total
    order; every witness the class returns is the least point under it.
    """

    def __init__(self, class_id: ClassId):
        """
        Initialize the concept class.

        Args:
            class_id: Identifier naming this class and its parameters
        """
        self.class_id = class_id

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self.class_id}>"

    @abstractmethod
    def universe(self) -> Iterator[Any]:
        """Enumerate every point of the bounded universe in canonical order."""

    @abstractmethod
    def concepts(self) -> Iterator[ConceptDesc]:
        """Enumerate every concept of the class."""

    @abstractmethod
    def members(self, c: ConceptDesc) -> Iterator[Any]:
        """Enumerate the points of ``c`` in canonical order."""

    @abstractmethod
    def contains(self, c: ConceptDesc, x: Any) -> bool:
        """Decide whether ``x`` is a member of ``c``."""

    @abstractmethod
    def is_point(self, x: Any) -> bool:
        """Decide whether ``x`` belongs to the universe."""

    @abstractmethod
    def is_concept(self, c: ConceptDesc) -> bool:
        """Decide whether ``c`` is a valid member of the class."""

    @property
    @abstractmethod
    def contains_empty(self) -> bool:
        """Whether the empty concept is a member of the class."""

    def order_key(self, x: Any) -> Any:
        """Sort key realizing the canonical total order on points."""
        return x

    def normalize(self, c: ConceptDesc) -> ConceptDesc:
        """Map a class-agnostic description onto this class's own form."""
        return c

    def validate_point(self, x: Any) -> Any:
        if not self.is_point(x):
            raise UniverseMismatch(f"{render_point(x)} is not a point of {self.class_id}")
        return x

    def validate_concept(self, c: ConceptDesc) -> ConceptDesc:
        if not self.is_concept(c):
            raise UniverseMismatch(f"{render_concept(c)} is not a concept of {self.class_id}")
        return c

    def witness(self, c: ConceptDesc) -> Optional[Any]:
        """Least member of ``c``, or None when ``c`` is empty."""
        return next(self.members(c), None)

    def is_empty(self, c: ConceptDesc) -> bool:
        return self.witness(c) is None

    def diff_witness(self, c1: ConceptDesc, c2: ConceptDesc) -> Optional[Any]:
        """Least point of ``c1 \\ c2``, or None when ``c1`` is a subset of ``c2``."""
        for x in self.members(c1):
            if not self.contains(c2, x):
                return x
        return None

    def subset_of(self, c1: ConceptDesc, c2: ConceptDesc) -> bool:
        return self.diff_witness(c1, c2) is None

    def equivalent(self, c1: ConceptDesc, c2: ConceptDesc) -> bool:
        """Extensional equality of two concepts."""
        return self.subset_of(c1, c2) and self.subset_of(c2, c1)

    def least(self, *points: Optional[Any]) -> Optional[Any]:
        """Least of the given points under the canonical order, ignoring None."""
        present = [p for p in points if p is not None]
        if not present:
            return None
        return min(present, key=self.order_key)

    def render_point(self, x: Any) -> str:
        return render_point(x)

    def render_concept(self, c: ConceptDesc) -> str:
        return render_concept(c)
