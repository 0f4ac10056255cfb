"""
Explicit distributions over finite universes and the example oracle that samples them.
"""

from typing import Any, List, Optional, Sequence
import logging
import numpy as np
from src.concepts.base import ConceptClass
from src.core.errors import DomainError, UnsupportedQuery
from src.core.oracle import Oracle
from src.models.concepts import ConceptDesc
from src.models.pac import LabeledSample
from src.models.queries import Labeled, Query, QueryKind

logger = logging.getLogger(__name__)


class Distribution:
    """Probability table over an ordered list of points."""

    def __init__(self, points: Sequence[Any], weights: Optional[Sequence[float]] = None):
        """
        Initialize the distribution.

        Args:
            points: Support, in a fixed order
            weights: Non-negative weights, normalized here; uniform when omitted

        Raises:
            DomainError: For an empty support or weights that cannot be normalized
        """
        if not points:
            raise DomainError("distribution support must be non-empty")
        probs = np.ones(len(points)) if weights is None else np.asarray(weights, dtype=float)
        if probs.shape != (len(points),) or np.any(probs < 0) or probs.sum() <= 0:
            raise DomainError("weights must be non-negative, one per point, with a positive sum")
        self.points: List[Any] = list(points)
        self.probs = probs / probs.sum()

    @classmethod
    def uniform(cls, concept_class: ConceptClass) -> "Distribution":
        return cls(list(concept_class.universe()))

    def __len__(self) -> int:
        return len(self.points)

    def probability(self, mask: Sequence[bool]) -> float:
        """Total mass of the points selected by ``mask``."""
        return float(np.dot(self.probs, np.asarray(mask, dtype=float)))


def _labeled(concept_class: ConceptClass, target: ConceptDesc, points: Sequence[Any]) -> LabeledSample:
    return LabeledSample(entries=[(x, concept_class.contains(target, x)) for x in points])


def draw_sample(
    dist: Distribution, concept_class: ConceptClass, target: ConceptDesc, m: int, seed: int
) -> LabeledSample:
    """
    Draw ``m`` independent points from ``dist`` and label them by ``target``.

    Args:
        dist: Distribution over the class's universe
        concept_class: Class the target lives in
        target: Labeling concept
        m: Number of draws
        seed: Seed of the generator; equal seeds give equal samples

    Returns:
        The labeled sample
    """
    if m < 0:
        raise DomainError(f"sample size must be non-negative, got {m}")
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(dist), size=m, p=dist.probs)
    return _labeled(concept_class, target, [dist.points[i] for i in idx])


class ExampleOracle(Oracle):
    """EX oracle: each call draws one labeled point from a fixed distribution."""

    def __init__(self, concept_class: ConceptClass, target: ConceptDesc, dist: Distribution, seed: int = 0):
        super().__init__(concept_class)
        self.target = concept_class.validate_concept(target)
        self.dist = dist
        self._rng = np.random.default_rng(seed)
        self.calls = 0

    def draw(self, m: int) -> LabeledSample:
        """Draw ``m`` labeled examples, continuing the oracle's random stream."""
        idx = self._rng.choice(len(self.dist), size=m, p=self.dist.probs)
        self.calls += m
        return _labeled(self.concept_class, self.target, [self.dist.points[i] for i in idx])

    def answer(self, query: Query) -> Labeled:
        if query.kind != QueryKind.EX:
            raise UnsupportedQuery(f"example oracles only answer EX queries, got {query.kind.value}")
        (x, label), = self.draw(1).entries
        return Labeled(point=x, label=label)


def exact_error(
    dist: Distribution, concept_class: ConceptClass, target: ConceptDesc, hypothesis: ConceptDesc
) -> float:
    """
    Mass of the symmetric difference between target and hypothesis.

    Computed by enumerating the distribution's support, so no sampling error.
    """
    mask = [concept_class.contains(target, x) != concept_class.contains(hypothesis, x) for x in dist.points]
    return dist.probability(mask)
