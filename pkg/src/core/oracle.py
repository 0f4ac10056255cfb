"""
Oracles: the abstract interface and the honest oracle over an explicit target.
"""

from abc import ABC, abstractmethod
from typing import Any, Tuple
import logging
from pydantic import BaseModel, ConfigDict
from src.concepts.base import ConceptClass
from src.core.errors import UnsupportedQuery
from src.models.concepts import ConceptDesc
from src.models.queries import (
    Answer,
    Counterexample,
    No,
    NoSuchExample,
    Positive,
    Query,
    QueryKind,
    Yes,
)

logger = logging.getLogger(__name__)


class OracleState(BaseModel):
    """Positive examples already handed out by a Pos oracle."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    issued: Tuple[Any, ...] = ()


def honest_answer(
    target: ConceptDesc, concept_class: ConceptClass, query: Query, state: OracleState
) -> Tuple[Answer, OracleState]:
    """
    Answer a query truthfully against ``target``.

    Counterexamples are the least point of the relevant difference under the
    class's canonical order, so transcripts are reproducible.

    Args:
        target: Target concept (a valid member of ``concept_class``)
        concept_class: Class the target lives in
        query: Query to answer
        state: Positive examples issued so far

    Returns:
        Tuple of the answer and the updated state

    Raises:
        UniverseMismatch: If the payload does not belong to the class
        UnsupportedQuery: For query kinds an honest session cannot answer
    """
    kind = query.kind
    if kind == QueryKind.MEM:
        x = concept_class.validate_point(query.point)
        return (Yes() if concept_class.contains(target, x) else No()), state

    if kind in (QueryKind.EQ, QueryKind.SUB, QueryKind.SUP):
        c = concept_class.validate_concept(query.concept)
        if kind == QueryKind.SUB:
            x = concept_class.diff_witness(c, target)
        elif kind == QueryKind.SUP:
            x = concept_class.diff_witness(target, c)
        else:
            x = concept_class.least(
                concept_class.diff_witness(c, target), concept_class.diff_witness(target, c)
            )
        return (Yes() if x is None else Counterexample(point=x)), state

    if kind == QueryKind.POS:
        issued = set(state.issued)
        for x in concept_class.members(target):
            if x not in issued:
                return Positive(point=x), OracleState(issued=state.issued + (x,))
        return NoSuchExample(), state

    if kind == QueryKind.ONE_POS:
        x = concept_class.witness(target)
        return (NoSuchExample() if x is None else Positive(point=x)), state

    raise UnsupportedQuery(f"{kind.value} queries are answered by example oracles, not sessions")


class Oracle(ABC):
    """Abstract base class for everything that answers learner queries."""

    def __init__(self, concept_class: ConceptClass):
        """
        Initialize the oracle.

        Args:
            concept_class: Class whose universe queries must come from
        """
        self.concept_class = concept_class

    @abstractmethod
    def answer(self, query: Query) -> Answer:
        """
        Answer one query.

        Args:
            query: The learner's query

        Returns:
            The answer
        """
        pass


class HonestOracle(Oracle):
    """Answers every query truthfully against a fixed target."""

    def __init__(self, concept_class: ConceptClass, target: ConceptDesc):
        """
        Initialize the honest oracle.

        Args:
            concept_class: Class the target lives in
            target: Target concept

        Raises:
            UniverseMismatch: If the target is not a member of the class
        """
        super().__init__(concept_class)
        self.target = concept_class.validate_concept(target)
        self.state = OracleState()

    def answer(self, query: Query) -> Answer:
        answer, self.state = honest_answer(self.target, self.concept_class, query, self.state)
        return answer
