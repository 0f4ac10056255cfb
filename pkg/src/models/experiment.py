"""
Data models for experiment configuration and complexity-table rows.
"""

from enum import Enum
from typing import Dict, Literal, Optional
from pydantic import BaseModel, Field, computed_field
from src.models.queries import QueryKind, QueryStats


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class LearnMode(str, Enum):
    """Query sets a learn run may use; the class decides which combinator runs."""

    POS = "pos"
    SUP = "sup"
    SUB = "sub"
    EQ = "eq"
    MEM = "mem"
    MEM_POS = "mem+1pos"
    SUB_MEM_POS = "sub+mem+1pos"
    EQ_MEM_POS = "eq+mem+1pos"

    @property
    def kind(self) -> QueryKind:
        """The query kind posed by the sublearners."""
        return {
            LearnMode.POS: QueryKind.POS,
            LearnMode.SUP: QueryKind.SUP,
            LearnMode.SUB: QueryKind.SUB,
            LearnMode.EQ: QueryKind.EQ,
            LearnMode.MEM: QueryKind.MEM,
            LearnMode.MEM_POS: QueryKind.MEM,
            LearnMode.SUB_MEM_POS: QueryKind.SUB,
            LearnMode.EQ_MEM_POS: QueryKind.EQ,
        }[self]


class Construction(str, Enum):
    """Lower-bound constructions."""

    PREFIX = "prefix"
    SINGLETON = "singleton"
    POS = "pos"


class ExperimentConfig(BaseModel):
    """One CLI invocation, fully resolved against settings."""

    command: Literal["learn", "lowerbound", "pac", "table"]
    class_spec: Optional[str] = None
    target_spec: Optional[str] = None
    positive: Optional[str] = Field(default=None, description="Positive example handed to Mem+1Pos modes")
    mode: LearnMode = LearnMode.EQ
    construction: Construction = Construction.PREFIX
    k: int = Field(default=2, ge=1)
    r: int = Field(default=2, ge=0)
    m: int = Field(default=2, ge=1)
    size: int = Field(default=16, ge=2, description="Universe size U for generated classes")
    seed: int = 0
    budget: int = Field(default=1_000_000, gt=0)
    trials: int = Field(default=20, ge=1)
    epsilon: float = Field(default=0.2, gt=0, lt=1)
    delta: float = Field(default=0.2, gt=0, lt=1)
    b: float = Field(default=4.0, gt=0)
    with_mem: bool = False
    format: OutputFormat = OutputFormat.JSON


class ComplexityRow(BaseModel):
    """One cell of the query-complexity table.

    ``observed`` holds the quantities checked against ``bounds`` under the same
    keys. Upper rows pass when every observed value is at most its bound; lower
    and impossible rows pass when every observed value is at least its bound.
    """

    mode: str
    query_set: str
    relation: Literal["upper", "lower", "impossible"] = "upper"
    measured: QueryStats = Field(default_factory=QueryStats)
    observed: Dict[str, float] = Field(default_factory=dict)
    bounds: Dict[str, float] = Field(default_factory=dict)
    note: str = ""

    @computed_field
    @property
    def passed(self) -> bool:
        if self.relation == "upper":
            return all(self.observed.get(key, 0) <= bound for key, bound in self.bounds.items())
        return all(self.observed.get(key, 0) >= bound for key, bound in self.bounds.items())
