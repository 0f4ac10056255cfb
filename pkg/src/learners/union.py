"""
Disjoint-union combinator.
"""

from typing import List, Sequence
import logging
from src.concepts.composite import UnionClass
from src.core.errors import ProtocolViolation, UniverseMismatch
from src.core.learner import Learner, Protocol, SublearnerSpec, counterexample_point
from src.core.oracle import Oracle
from src.core.session import run_session
from src.models.concepts import Tagged, UnionConcept
from src.models.queries import CONCEPT_KINDS, Counterexample, Query, QueryKind, SessionResult, Yes

logger = logging.getLogger(__name__)


class DisjointUnionLearner(Learner):
    """Learns a disjoint union in as many queries as the components need together.

    Counterexamples carry their component tag, so each one is routed to
    exactly one sublearner; membership queries are routed by the tag of the
    point asked.
    """

    concept_class: UnionClass

    def __init__(self, concept_class: UnionClass, subs: Sequence[SublearnerSpec], kind: QueryKind):
        """
        Initialize the combinator.

        Args:
            concept_class: Union class to learn in
            subs: One sublearner spec per component, all posing ``kind`` queries
            kind: EQ, Sub, Sup or Mem
        """
        if kind != QueryKind.MEM and kind not in CONCEPT_KINDS:
            raise ValueError(f"union combinator does not pose {kind.value} queries")
        if len(subs) != concept_class.k:
            raise UniverseMismatch(f"{concept_class.k} components but {len(subs)} sublearners")
        for part, spec in zip(concept_class.parts, subs):
            if spec.concept_class.class_id != part.class_id or spec.query_kind != kind:
                raise UniverseMismatch(
                    f"{spec.query_kind.value} sublearner for {spec.concept_class.class_id} "
                    f"cannot learn {part.class_id} from {kind.value}"
                )
        super().__init__(concept_class)
        self.subs = list(subs)
        self.kind = kind

    def protocol(self) -> Protocol:
        learners = [spec.spawn() for spec in self.subs]
        for learner in learners:
            learner.start()
        if self.kind == QueryKind.MEM:
            yield from self._route_membership(learners)
        else:
            yield from self._route_counterexamples(learners)
        return UnionConcept(parts=tuple(learner.hypothesis for learner in learners))

    def _route_membership(self, learners: List[Learner]):
        for dim, learner in enumerate(learners):
            while not learner.finished:
                inner = learner.pending.point
                learner.feed((yield Query.mem(Tagged(dim, inner))))

    def _route_counterexamples(self, learners: List[Learner]):
        while not all(learner.finished for learner in learners):
            current = tuple(
                learner.hypothesis if learner.finished else learner.pending.concept
                for learner in learners
            )
            query = Query.with_concept(self.kind, UnionConcept(parts=current))
            x = counterexample_point((yield query))
            if x is None:
                for learner in learners:
                    if not learner.finished:
                        learner.feed(Yes())
                continue
            if not isinstance(x, Tagged) or not 0 <= x.dim < len(learners):
                raise ProtocolViolation(f"untagged counterexample {x!r}")
            target = learners[x.dim]
            if target.finished:
                raise ProtocolViolation(f"counterexample routed to finished component {x.dim}")
            target.feed(Counterexample(point=x.inner))


def learn_disjoint_union(
    subs: Sequence[SublearnerSpec],
    oracle: Oracle,
    mode: QueryKind,
    budget: int = 1_000_000,
) -> SessionResult:
    """Learn a disjoint-union target from ``mode`` queries."""
    if not isinstance(oracle.concept_class, UnionClass):
        raise UniverseMismatch(f"{oracle.concept_class.class_id} is not a union class")
    return run_session(DisjointUnionLearner(oracle.concept_class, subs, mode), oracle, budget)
