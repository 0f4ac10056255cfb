"""
Base learner abstraction: a resumable state machine that emits queries.
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Callable, Generator, Optional
import logging
from pydantic import BaseModel, ConfigDict, Field
from src.core.errors import ProtocolViolation
from src.models.concepts import ConceptDesc
from src.models.queries import (
    Answer,
    Counterexample,
    Done,
    LearnerEvent,
    Need,
    No,
    NoSuchExample,
    Positive,
    Query,
    QueryKind,
    Yes,
)

if TYPE_CHECKING:
    from src.concepts.base import ConceptClass
    from src.models.queries import SessionResult

logger = logging.getLogger(__name__)

Protocol = Generator[Query, Answer, ConceptDesc]


class Learner(ABC):
    """Abstract base class for every learner, reference or composite.

    Subclasses implement ``protocol`` as a generator: each ``yield`` hands a
    query out and receives its answer, and ``return`` delivers the hypothesis.
    Drivers use ``start``/``feed``, which wrap the generator into
    ``Need``/``Done`` events.
    """

    def __init__(self, concept_class: "ConceptClass"):
        """
        Initialize the learner.

        Args:
            concept_class: Class the learner identifies a target in
        """
        self.concept_class = concept_class
        self._protocol: Optional[Protocol] = None
        self._event: Optional[LearnerEvent] = None

    @abstractmethod
    def protocol(self) -> Protocol:
        """Generator yielding queries and returning the final hypothesis."""

    @property
    def finished(self) -> bool:
        return isinstance(self._event, Done)

    @property
    def hypothesis(self) -> Optional[ConceptDesc]:
        return self._event.hypothesis if isinstance(self._event, Done) else None

    @property
    def pending(self) -> Optional[Query]:
        """The query currently awaiting an answer, if any."""
        return self._event.query if isinstance(self._event, Need) else None

    def start(self) -> LearnerEvent:
        """
        Begin the protocol.

        Returns:
            The first event: a query to answer, or the hypothesis

        Raises:
            ProtocolViolation: If the learner was already started
        """
        if self._protocol is not None:
            raise ProtocolViolation(f"{self.__class__.__name__} already started")
        self._protocol = self.protocol()
        return self._advance(lambda: next(self._protocol))

    def feed(self, answer: Answer) -> LearnerEvent:
        """
        Deliver the answer to the pending query.

        Args:
            answer: Oracle answer for ``pending``

        Returns:
            The next event

        Raises:
            ProtocolViolation: If no query is pending
        """
        if self._protocol is None or not isinstance(self._event, Need):
            raise ProtocolViolation(f"{self.__class__.__name__} has no pending query")
        return self._advance(lambda: self._protocol.send(answer))

    def _advance(self, step: Callable[[], Query]) -> LearnerEvent:
        try:
            self._event = Need(query=step())
        except StopIteration as stop:
            if stop.value is None:
                raise ProtocolViolation(f"{self.__class__.__name__} returned no hypothesis")
            self._event = Done(hypothesis=stop.value)
            logger.debug(f"{self.__class__.__name__} done")
        return self._event


class SublearnerSpec(BaseModel):
    """A component class paired with the reference learner used for it."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    concept_class: Any = Field(description="Component ConceptClass the learner runs on")
    query_kind: QueryKind
    learner_type: Callable[..., Learner]

    def spawn(self) -> Learner:
        """Create a fresh learner instance."""
        return self.learner_type(self.concept_class)

    def standalone(self, target: ConceptDesc, budget: int = 1_000_000) -> "SessionResult":
        """
        Run the reference learner alone against the honest oracle.

        Args:
            target: Component target concept
            budget: Query budget

        Returns:
            SessionResult of the standalone run
        """
        from src.core.oracle import HonestOracle
        from src.core.session import run_session

        return run_session(self.spawn(), HonestOracle(self.concept_class, target), budget)

    def standalone_count(self, target: ConceptDesc) -> int:
        """Number of ``query_kind`` queries the standalone learner makes on ``target``."""
        return self.standalone(target).stats.count(self.query_kind)



def membership_answer(answer: Answer) -> bool:
    """Decode the answer to a Mem query."""
    if isinstance(answer, Yes):
        return True
    if isinstance(answer, No):
        return False
    raise ProtocolViolation(f"expected Yes or No, got {answer.kind}")


def counterexample_point(answer: Answer) -> Optional[Any]:
    """Decode the answer to an EQ/Sub/Sup query: None for Yes, else the counterexample."""
    if isinstance(answer, Yes):
        return None
    if isinstance(answer, Counterexample):
        return answer.point
    raise ProtocolViolation(f"expected Yes or a counterexample, got {answer.kind}")


def positive_point(answer: Answer) -> Optional[Any]:
    """Decode the answer to a Pos/1Pos query: None when no example exists."""
    if isinstance(answer, Positive):
        return answer.point
    if isinstance(answer, NoSuchExample):
        return None
    raise ProtocolViolation(f"expected a positive example, got {answer.kind}")
