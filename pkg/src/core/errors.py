"""
Exception hierarchy shared by every module of the learning framework.
"""

from typing import TYPE_CHECKING, List, Optional, Tuple

if TYPE_CHECKING:
    from src.models.queries import Answer, Query, QueryStats


class ModularLearningError(Exception):
    """Root of all domain errors raised by the framework."""


class ConfigError(ModularLearningError):
    """Malformed experiment configuration or command-line input."""


class ConceptSyntaxError(ConfigError):
    """A class or concept spec string could not be parsed."""


class UniverseMismatch(ModularLearningError):
    """A point or concept does not belong to the universe of the class at hand."""


class UnsupportedQuery(ModularLearningError):
    """The class or oracle cannot decide the relation the query asks about."""


class ProtocolViolation(ModularLearningError):
    """A learner or oracle broke the query/answer contract."""


class InvalidPositiveExample(ModularLearningError):
    """The supplied positive example is not a member of the target."""


class EmptyConceptClass(ModularLearningError):
    """A component class contains the empty concept where that is not allowed."""


class UniverseExhausted(ModularLearningError):
    """The bounded universe has no unissued points left."""


class FreshValuesExhausted(ModularLearningError):
    """The adversary ran out of fresh values below the universe bound."""


class PreconditionUnmet(ModularLearningError):
    """An operation was called before its precondition was established."""


class DomainError(ModularLearningError):
    """A numeric bound was evaluated outside its stated range."""


class NoConsistentHypothesis(ModularLearningError):
    """No concept pair is consistent with a sample that should be realizable."""


class BudgetExhausted(ModularLearningError):
    """The learner did not finish within its query budget."""

    def __init__(
        self,
        stats: "QueryStats",
        transcript: Optional[List[Tuple["Query", "Answer"]]] = None,
    ):
        """
        Initialize the error.

        Args:
            stats: Query counts at the moment the budget ran out
            transcript: Query/answer pairs exchanged so far
        """
        super().__init__(f"query budget exhausted after {stats.total} queries")
        self.stats = stats
        self.transcript = transcript or []
