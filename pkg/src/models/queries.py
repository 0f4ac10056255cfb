"""
Data models for the learner/oracle query vocabulary and session accounting.
"""

from enum import Enum
from typing import Annotated, Any, Dict, List, Literal, Optional, Union
from pydantic import BaseModel, ConfigDict, Field, model_validator
from src.models.concepts import ConceptDesc


class QueryKind(str, Enum):
    """The seven query types a learner may pose."""

    ONE_POS = "1Pos"
    POS = "Pos"
    MEM = "Mem"
    EQ = "EQ"
    SUB = "Sub"
    SUP = "Sup"
    EX = "EX"


CONCEPT_KINDS = frozenset({QueryKind.EQ, QueryKind.SUB, QueryKind.SUP})


class Query(BaseModel):
    """A question from a learner; the payload shape is fixed by the kind."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: QueryKind
    point: Optional[Any] = None
    concept: Optional[ConceptDesc] = None

    @model_validator(mode="after")
    def _payload_matches_kind(self) -> "Query":
        if self.kind == QueryKind.MEM:
            if self.point is None or self.concept is not None:
                raise ValueError("Mem queries carry exactly one point")
        elif self.kind in CONCEPT_KINDS:
            if self.concept is None or self.point is not None:
                raise ValueError(f"{self.kind.value} queries carry exactly one concept")
        elif self.point is not None or self.concept is not None:
            raise ValueError(f"{self.kind.value} queries carry no payload")
        return self

    @classmethod
    def mem(cls, point: Any) -> "Query":
        return cls(kind=QueryKind.MEM, point=point)

    @classmethod
    def eq(cls, concept: ConceptDesc) -> "Query":
        return cls(kind=QueryKind.EQ, concept=concept)

    @classmethod
    def sub(cls, concept: ConceptDesc) -> "Query":
        return cls(kind=QueryKind.SUB, concept=concept)

    @classmethod
    def sup(cls, concept: ConceptDesc) -> "Query":
        return cls(kind=QueryKind.SUP, concept=concept)

    @classmethod
    def with_concept(cls, kind: QueryKind, concept: ConceptDesc) -> "Query":
        return cls(kind=kind, concept=concept)

    @classmethod
    def pos(cls) -> "Query":
        return cls(kind=QueryKind.POS)

    @classmethod
    def one_pos(cls) -> "Query":
        return cls(kind=QueryKind.ONE_POS)

    @classmethod
    def ex(cls) -> "Query":
        return cls(kind=QueryKind.EX)


class _Answer(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Yes(_Answer):
    kind: Literal["yes"] = "yes"


class No(_Answer):
    kind: Literal["no"] = "no"


class Counterexample(_Answer):
    kind: Literal["counterexample"] = "counterexample"
    point: Any


class Positive(_Answer):
    kind: Literal["positive"] = "positive"
    point: Any


class NoSuchExample(_Answer):
    kind: Literal["none"] = "none"


class Labeled(_Answer):
    kind: Literal["labeled"] = "labeled"
    point: Any
    label: bool


Answer = Annotated[
    Union[Yes, No, Counterexample, Positive, NoSuchExample, Labeled],
    Field(discriminator="kind"),
]


class Need(BaseModel):
    """Learner event: the learner needs this query answered."""

    model_config = ConfigDict(frozen=True)

    query: Query


class Done(BaseModel):
    """Learner event: the learner has settled on a hypothesis."""

    model_config = ConfigDict(frozen=True)

    hypothesis: ConceptDesc


LearnerEvent = Union[Need, Done]


class QueryStats(BaseModel):
    """Per-kind query counters for one session."""

    counts: Dict[QueryKind, int] = Field(default_factory=dict)
    total: int = 0

    def count(self, kind: QueryKind) -> int:
        return self.counts.get(kind, 0)

    @model_validator(mode="after")
    def _total_matches(self) -> "QueryStats":
        if any(v < 0 for v in self.counts.values()):
            raise ValueError("query counts must be non-negative")
        if self.total != sum(self.counts.values()):
            raise ValueError("total must equal the sum of per-kind counts")
        return self


class TranscriptEntry(BaseModel):
    """One oracle call: the query and the answer it received."""

    model_config = ConfigDict(frozen=True)

    query: Query
    answer: Answer


class SessionResult(BaseModel):
    """Outcome of a completed session."""

    hypothesis: ConceptDesc
    stats: QueryStats
    transcript: List[TranscriptEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def _transcript_matches_stats(self) -> "SessionResult":
        if len(self.transcript) != self.stats.total:
            raise ValueError("transcript length must equal stats.total")
        return self
