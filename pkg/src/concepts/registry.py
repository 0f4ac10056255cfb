"""
Factory turning class identifiers into concept-class instances.
"""

from functools import lru_cache
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
from src.concepts.composite import PairDemo, ProductClass, UnionClass
from src.core.errors import ConfigError
from src.models.concepts import ClassId

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def build_class(class_id: ClassId) -> ConceptClass:
    """
    Build the concept class named by ``class_id``.

    Args:
        class_id: Parsed class identifier

    Returns:
        ConceptClass instance (cached; instances are immutable)

    Raises:
        ConfigError: If the identifier names no known class
    """
    name = class_id.name
    if name == "singletons":
        return Singletons(class_id.size)
    if name == "intervals":
        return Intervals(class_id.size)
    if name == "intervals_or_empty":
        return Intervals(class_id.size, with_empty=True)
    if name == "finitesets":
        if class_id.size > 12:
            raise ConfigError("finitesets is enumerated exhaustively; keep U <= 12")
        return FiniteSets(class_id.size)
    if name == "prefix":
        return PrefixClass(class_id.size, class_id.max_len)
    if name == "letters":
        return LetterPairs()
    if name == "halves":
        return SignedHalves(class_id.size)
    if name == "pairdemo":
        return PairDemo(class_id.size)
    if name == "prod":
        return ProductClass([build_class(p) for p in class_id.parts])
    if name == "union":
        return UnionClass([build_class(p) for p in class_id.parts])
    raise ConfigError(f"unknown concept class: {class_id}")
