"""
Concept classes over bounded universes and the set operations on them.
"""

from typing import Any, Optional
from src.concepts.base import ConceptClass
from src.concepts.classes import (
    FiniteSets,
    Intervals,
    LetterPairs,
    PrefixClass,
    SignedHalves,
    Singletons,
)
from src.concepts.composite import PairDemo, ProductClass, UnionClass
from src.concepts.profile import NegativeProfile, all_negative_profile, negative_profile
from src.concepts.registry import build_class
from src.models.concepts import ConceptDesc


def contains(concept_class: ConceptClass, c: ConceptDesc, x: Any) -> bool:
    """Membership of ``x`` in ``c``; raises UniverseMismatch on foreign inputs."""
    concept_class.validate_concept(c)
    concept_class.validate_point(x)
    return concept_class.contains(c, x)


def subset_of(concept_class: ConceptClass, c1: ConceptDesc, c2: ConceptDesc) -> bool:
    """Whether ``c1`` is a subset of ``c2``."""
    concept_class.validate_concept(c1)
    concept_class.validate_concept(c2)
    return concept_class.subset_of(c1, c2)


def diff_witness(concept_class: ConceptClass, c1: ConceptDesc, c2: ConceptDesc) -> Optional[Any]:
    """Least point of ``c1 \\ c2`` or None."""
    concept_class.validate_concept(c1)
    concept_class.validate_concept(c2)
    return concept_class.diff_witness(c1, c2)


def witness(concept_class: ConceptClass, c: ConceptDesc) -> Optional[Any]:
    """Least member of ``c`` or None when empty."""
    return concept_class.witness(c)


__all__ = [
    "ConceptClass",
    "FiniteSets",
    "Intervals",
    "LetterPairs",
    "PrefixClass",
    "SignedHalves",
    "Singletons",
    "PairDemo",
    "ProductClass",
    "UnionClass",
    "build_class",
    "contains",
    "subset_of",
    "diff_witness",
    "witness",
    "NegativeProfile",
    "all_negative_profile",
    "negative_profile",
]
