"""
Data models for points, concept descriptions and concept-class identifiers.
"""

from typing import Annotated, Any, FrozenSet, Literal, NamedTuple, Optional, Tuple, Union
from pydantic import BaseModel, ConfigDict, Field, model_validator


class Pair(NamedTuple):
    """A point of the prefix class: a symbol string and a value."""

    prefix: Tuple[int, ...]
    value: int


class Tagged(NamedTuple):
    """A point of a disjoint union, tagged with its component index."""

    dim: int
    inner: Any


class Vector(tuple):
    """A point of a cross-product; one coordinate per component."""

    def replace(self, dim: int, value: Any) -> "Vector":
        """
        Return a copy with the coordinate at ``dim`` replaced.

        Args:
            dim: Zero-based coordinate index
            value: New coordinate value

        Returns:
            The substituted vector
        """
        coords = list(self)
        coords[dim] = value
        return Vector(coords)

    def __repr__(self) -> str:
        return f"Vector{tuple.__repr__(self)}"


# Nat/signed values are plain ints, letters are plain strs.
Point = Union[int, str, Pair, Tagged, Vector]


class _Concept(BaseModel):
    model_config = ConfigDict(frozen=True)


class Interval(_Concept):
    """Closed integer interval ``[lo, hi]``."""

    kind: Literal["interval"] = "interval"
    lo: int
    hi: int

    @model_validator(mode="after")
    def _ordered(self) -> "Interval":
        if self.lo > self.hi:
            raise ValueError(f"interval bounds out of order: [{self.lo},{self.hi}]")
        return self


class Singleton(_Concept):
    """The one-element concept ``{j}``."""

    kind: Literal["singleton"] = "singleton"
    j: int


class FiniteSet(_Concept):
    """An explicit finite set of points."""

    kind: Literal["finite"] = "finite"
    elements: FrozenSet[Union[int, str]] = frozenset()


class PrefixConcept(_Concept):
    """The prefix-class concept c(s), stored as the string s only."""

    kind: Literal["prefix"] = "prefix"
    s: Tuple[int, ...] = ()


class Empty(_Concept):
    """The empty concept."""

    kind: Literal["empty"] = "empty"


class ProductConcept(_Concept):
    """Cross-product of one concept per component."""

    kind: Literal["product"] = "product"
    parts: Tuple["ConceptDesc", ...]


class UnionConcept(_Concept):
    """Disjoint union of one concept per component."""

    kind: Literal["union"] = "union"
    parts: Tuple["ConceptDesc", ...]


ConceptDesc = Annotated[
    Union[Interval, Singleton, FiniteSet, PrefixConcept, Empty, ProductConcept, UnionConcept],
    Field(discriminator="kind"),
]

ProductConcept.model_rebuild()
UnionConcept.model_rebuild()


ClassName = Literal[
    "singletons",
    "intervals",
    "intervals_or_empty",
    "finitesets",
    "prefix",
    "letters",
    "halves",
    "pairdemo",
    "prod",
    "union",
]


class ClassId(BaseModel):
    """Names a concept class together with its universe parameters."""

    model_config = ConfigDict(frozen=True)

    name: ClassName
    size: Optional[int] = Field(default=None, description="U for bounded classes, m for singletons")
    max_len: Optional[int] = Field(default=None, description="Longest prefix string")
    parts: Tuple["ClassId", ...] = ()

    @model_validator(mode="after")
    def _shape(self) -> "ClassId":
        composite = self.name in ("prod", "union")
        if composite and not self.parts:
            raise ValueError(f"{self.name} needs at least one component class")
        if not composite and self.parts:
            raise ValueError(f"{self.name} takes no component classes")
        if self.name in ("singletons", "intervals", "intervals_or_empty", "finitesets", "prefix", "halves", "pairdemo"):
            if self.size is None or self.size < 1:
                raise ValueError(f"{self.name} needs a positive universe size")
        if self.name == "prefix" and (self.max_len is None or self.max_len < 0):
            raise ValueError("prefix needs a non-negative maximum string length")
        return self

    def __str__(self) -> str:
        if self.parts:
            return f"{self.name}({','.join(str(p) for p in self.parts)})"
        if self.name == "prefix":
            return f"prefix({self.size},{self.max_len})"
        if self.size is None:
            return self.name
        return f"{self.name}({self.size})"


ClassId.model_rebuild()
