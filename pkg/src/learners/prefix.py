"""
Learner for the prefix class from equivalence or subset queries.
"""

import logging
from src.concepts.classes import PrefixClass
from src.core.errors import ProtocolViolation
from src.core.learner import Learner, Protocol, counterexample_point
from src.core.oracle import Oracle
from src.core.session import run_session
from src.models.concepts import PrefixConcept
from src.models.queries import Query, QueryKind, SessionResult

logger = logging.getLogger(__name__)


class PrefixLearner(Learner):
    """Learns c(s) in at most ``|s| + 1`` queries.

    Starting from the empty string, a negative counterexample ``(s, a)``
    extends the guess to ``s·a``; a positive counterexample ``(t, a)`` lies on
    a longer prefix of the target, so the guess jumps to ``t``. Subset oracles
    only ever give the negative case.
    """

    concept_class: PrefixClass

    def __init__(self, concept_class: PrefixClass, kind: QueryKind = QueryKind.EQ):
        """
        Initialize the learner.

        Args:
            concept_class: Prefix class to learn in
            kind: EQ or Sub
        """
        if kind not in (QueryKind.EQ, QueryKind.SUB):
            raise ValueError(f"prefix learner poses EQ or Sub queries, not {kind.value}")
        super().__init__(concept_class)
        self.kind = kind

    def protocol(self) -> Protocol:
        cls = self.concept_class
        s = ()
        while True:
            guess = PrefixConcept(s=s)
            x = counterexample_point((yield Query.with_concept(self.kind, guess)))
            if x is None:
                return guess
            if cls.contains(guess, x):
                if x.prefix != s:
                    raise ProtocolViolation(
                        f"negative counterexample {cls.render_point(x)} does not extend {s}"
                    )
                s = s + (x.value,)
            else:
                if len(x.prefix) <= len(s) or x.prefix[: len(s)] != s:
                    raise ProtocolViolation(
                        f"positive counterexample {cls.render_point(x)} does not extend {s}"
                    )
                s = x.prefix
            logger.debug(f"prefix guess moves to {s}")


def prefix_sub_learner(concept_class: PrefixClass) -> PrefixLearner:
    return PrefixLearner(concept_class, QueryKind.SUB)


def prefix_eq_learner(concept_class: PrefixClass) -> PrefixLearner:
    return PrefixLearner(concept_class, QueryKind.EQ)


def learn_prefix_eq(
    oracle: Oracle, budget: int = 1_000_000, kind: QueryKind = QueryKind.EQ
) -> SessionResult:
    """
    Learn a prefix-class target.

    Args:
        oracle: Oracle over a PrefixClass
        budget: Query budget
        kind: EQ, or Sub (the same learner only ever sees negative counterexamples)

    Returns:
        SessionResult with the learned c(s)
    """
    return run_session(PrefixLearner(oracle.concept_class, kind), oracle, budget)
