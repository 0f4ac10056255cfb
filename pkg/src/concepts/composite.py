"""
Cross-product and disjoint-union wrappers around component concept classes.
"""

from itertools import product
from typing import Any, Iterator, List, Optional, Sequence
from src.concepts.base import ConceptClass
from src.concepts.classes import LetterPairs, SignedHalves
from src.models.concepts import (
    ClassId,
    ConceptDesc,
    Empty,
    ProductConcept,
    Tagged,
    UnionConcept,
    Vector,
)


class ProductClass(ConceptClass):
    """Cross-product of k component classes; points are ``Vector`` values."""

    def __init__(self, parts: Sequence[ConceptClass], class_id: Optional[ClassId] = None):
        super().__init__(class_id or ClassId(name="prod", parts=tuple(p.class_id for p in parts)))
        self.parts: List[ConceptClass] = list(parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def universe(self) -> Iterator[Vector]:
        return (Vector(x) for x in product(*(p.universe() for p in self.parts)))

    def concepts(self) -> Iterator[ConceptDesc]:
        return (
            ProductConcept(parts=tuple(cs))
            for cs in product(*(list(p.concepts()) for p in self.parts))
        )

    def members(self, c: ConceptDesc) -> Iterator[Vector]:
        if not isinstance(c, ProductConcept):
            return iter(())
        pools = [list(part.members(ci)) for part, ci in zip(self.parts, c.parts)]
        return (Vector(x) for x in product(*pools))

    def contains(self, c: ConceptDesc, x: Any) -> bool:
        if not isinstance(c, ProductConcept):
            return False
        return all(part.contains(ci, xi) for part, ci, xi in zip(self.parts, c.parts, x))

    def order_key(self, x: Vector) -> tuple:
        return tuple(part.order_key(xi) for part, xi in zip(self.parts, x))

    def is_point(self, x: Any) -> bool:
        return (
            isinstance(x, Vector)
            and len(x) == self.k
            and all(part.is_point(xi) for part, xi in zip(self.parts, x))
        )

    def is_concept(self, c: ConceptDesc) -> bool:
        if isinstance(c, Empty):
            return self.contains_empty
        return (
            isinstance(c, ProductConcept)
            and len(c.parts) == self.k
            and all(part.is_concept(ci) for part, ci in zip(self.parts, c.parts))
        )

    @property
    def contains_empty(self) -> bool:
        return any(part.contains_empty for part in self.parts)

    def normalize(self, c: ConceptDesc) -> ConceptDesc:
        if isinstance(c, ProductConcept) and len(c.parts) == self.k:
            return ProductConcept(
                parts=tuple(part.normalize(ci) for part, ci in zip(self.parts, c.parts))
            )
        return c

    def is_empty(self, c: ConceptDesc) -> bool:
        if not isinstance(c, ProductConcept):
            return True
        return any(part.is_empty(ci) for part, ci in zip(self.parts, c.parts))

    def subset_of(self, c1: ConceptDesc, c2: ConceptDesc) -> bool:
        # Componentwise containment holds only for nonempty products.
        if self.is_empty(c1):
            return True
        if self.is_empty(c2):
            return False
        return all(
            part.subset_of(a, b) for part, a, b in zip(self.parts, c1.parts, c2.parts)
        )

    def diff_witness(self, c1: ConceptDesc, c2: ConceptDesc) -> Optional[Vector]:
        if self.subset_of(c1, c2):
            return None
        return super().diff_witness(c1, c2)

    def substitute(self, p: Vector, dim: int, value: Any) -> Vector:
        """``p`` with coordinate ``dim`` replaced by ``value``."""
        return p.replace(dim, value)


class PairDemo(ProductClass):
    """Bounded analog of ``{{a},{a,b}} x {N, Z \\ N}``."""

    def __init__(self, size: int):
        super().__init__(
            [LetterPairs(), SignedHalves(size)], class_id=ClassId(name="pairdemo", size=size)
        )
        self.size = size


class UnionClass(ConceptClass):
    """Disjoint union of k component classes; points are ``Tagged`` values."""

    def __init__(self, parts: Sequence[ConceptClass]):
        super().__init__(ClassId(name="union", parts=tuple(p.class_id for p in parts)))
        self.parts: List[ConceptClass] = list(parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def universe(self) -> Iterator[Tagged]:
        for dim, part in enumerate(self.parts):
            for x in part.universe():
                yield Tagged(dim, x)

    def concepts(self) -> Iterator[ConceptDesc]:
        return (
            UnionConcept(parts=tuple(cs))
            for cs in product(*(list(p.concepts()) for p in self.parts))
        )

    def members(self, c: ConceptDesc) -> Iterator[Tagged]:
        if not isinstance(c, UnionConcept):
            return
        for dim, (part, ci) in enumerate(zip(self.parts, c.parts)):
            for x in part.members(ci):
                yield Tagged(dim, x)

    def contains(self, c: ConceptDesc, x: Any) -> bool:
        if not isinstance(c, UnionConcept):
            return False
        return self.parts[x.dim].contains(c.parts[x.dim], x.inner)

    def order_key(self, x: Tagged) -> tuple:
        return (x.dim, self.parts[x.dim].order_key(x.inner))

    def is_point(self, x: Any) -> bool:
        return (
            isinstance(x, Tagged)
            and isinstance(x.dim, int)
            and 0 <= x.dim < self.k
            and self.parts[x.dim].is_point(x.inner)
        )

    def is_concept(self, c: ConceptDesc) -> bool:
        return (
            isinstance(c, UnionConcept)
            and len(c.parts) == self.k
            and all(part.is_concept(ci) for part, ci in zip(self.parts, c.parts))
        )

    @property
    def contains_empty(self) -> bool:
        return all(part.contains_empty for part in self.parts)

    def normalize(self, c: ConceptDesc) -> ConceptDesc:
        if isinstance(c, UnionConcept) and len(c.parts) == self.k:
            return UnionConcept(
                parts=tuple(part.normalize(ci) for part, ci in zip(self.parts, c.parts))
            )
        return c

    def subset_of(self, c1: ConceptDesc, c2: ConceptDesc) -> bool:
        return all(part.subset_of(a, b) for part, a, b in zip(self.parts, c1.parts, c2.parts))

    def diff_witness(self, c1: ConceptDesc, c2: ConceptDesc) -> Optional[Tagged]:
        for dim, (part, a, b) in enumerate(zip(self.parts, c1.parts, c2.parts)):
            x = part.diff_witness(a, b)
            if x is not None:
                return Tagged(dim, x)
        return None
