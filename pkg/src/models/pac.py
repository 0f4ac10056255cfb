"""
Data models for PAC learning of cross-products.
"""

from typing import Any, List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field
from src.models.concepts import ConceptDesc

LabeledPoint = Tuple[Any, bool]


class PacParams(BaseModel):
    """Accuracy, confidence and sizing constants for one PAC run."""

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(gt=0, lt=1, description="Accuracy")
    delta: float = Field(gt=0, lt=1, description="Confidence")
    b: float = Field(default=4.0, gt=0, description="Sample-complexity constant")
    d1: int = Field(default=0, ge=0, description="VC dimension of the first component")
    d2: int = Field(default=0, ge=0, description="VC dimension of the second component")

    @property
    def d(self) -> int:
        return self.d1 + self.d2


class LabeledSample(BaseModel):
    """Labeled product points drawn from an example oracle."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    entries: List[LabeledPoint] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def positives(self) -> List[Any]:
        return [x for x, label in self.entries if label]

    @property
    def negatives(self) -> List[Any]:
        return [x for x, label in self.entries if not label]


class SubconceptSearch(BaseModel):
    """Result of the consistent-subconcept search over two component classes."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    pair: Optional[Tuple[ConceptDesc, ConceptDesc]] = None
    nodes: int = 0
    epsilon_prime: float
    delta_prime: float

    @property
    def found(self) -> bool:
        return self.pair is not None


class PacOutcome(BaseModel):
    """Hypothesis of one PAC run and what it cost."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    hypothesis: ConceptDesc
    sample_size: int
    nodes: int = 0
    mem_queries: int = 0
    labels: List[List[LabeledPoint]] = Field(
        default_factory=list, description="Per-dimension labeled sets built with Mem queries"
    )


class TrialReport(BaseModel):
    """One seeded PAC trial; serialized as a CSV row."""

    seed: int
    m: int
    epsilon: float
    delta: float
    error: float
    nodes: int
    mem_queries: int

    @property
    def failed(self) -> bool:
        return self.error > self.epsilon


class TrialSummary(BaseModel):
    """Aggregate of a batch of trials against the statistical acceptance threshold."""

    trials: int
    failures: int
    failure_rate: float
    threshold: float
    passed: bool
