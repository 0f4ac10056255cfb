"""
Session driver and query accounting.
"""

from typing import Iterable, List, Sequence
import logging
from src.core.errors import BudgetExhausted
from src.core.learner import Learner
from src.core.oracle import Oracle
from src.models.queries import (
    Answer,
    Counterexample,
    Labeled,
    Need,
    No,
    NoSuchExample,
    Positive,
    Query,
    QueryKind,
    QueryStats,
    SessionResult,
    TranscriptEntry,
    Yes,
)
from src.utils.concept_syntax import render_concept, render_point

logger = logging.getLogger(__name__)


def record_query(stats: QueryStats, kind: QueryKind) -> QueryStats:
    """
    Count one more query of ``kind``.

    Args:
        stats: Current counters

    Returns:
        New counters with ``kind`` and the total incremented
    """
    counts = dict(stats.counts)
    counts[kind] = counts.get(kind, 0) + 1
    return QueryStats(counts=counts, total=stats.total + 1)


def recount(transcript: Iterable[TranscriptEntry]) -> QueryStats:
    """Rebuild counters from a transcript."""
    stats = QueryStats()
    for entry in transcript:
        stats = record_query(stats, entry.query.kind)
    return stats


def run_session(learner: Learner, oracle: Oracle, budget: int) -> SessionResult:
    """
    Pump learner events through the oracle until the learner is done.

    Args:
        learner: Fresh (not yet started) learner
        oracle: Oracle answering the learner's queries
        budget: Maximum number of oracle calls

    Returns:
        SessionResult with hypothesis, counters and transcript

    Raises:
        BudgetExhausted: If the learner needs more than ``budget`` queries
    """
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")

    stats = QueryStats()
    transcript: List[TranscriptEntry] = []
    event = learner.start()
    while isinstance(event, Need):
        if stats.total >= budget:
            logger.info(f"{learner.__class__.__name__} exhausted budget {budget}")
            raise BudgetExhausted(stats, [(e.query, e.answer) for e in transcript])
        query = event.query
        answer = oracle.answer(query)
        stats = record_query(stats, query.kind)
        transcript.append(TranscriptEntry(query=query, answer=answer))
        logger.debug(f"{stats.total - 1} {render_query(query)} -> {render_answer(answer)}")
        event = learner.feed(answer)

    logger.info(
        f"{learner.__class__.__name__} finished after {stats.total} queries: "
        f"{render_concept(event.hypothesis)}"
    )
    return SessionResult(hypothesis=event.hypothesis, stats=stats, transcript=transcript)


def render_query(query: Query) -> str:
    if query.point is not None:
        return f"{query.kind.value} {render_point(query.point)}"
    if query.concept is not None:
        return f"{query.kind.value} {render_concept(query.concept)}"
    return f"{query.kind.value} -"


def render_answer(answer: Answer) -> str:
    if isinstance(answer, Yes):
        return "Yes"
    if isinstance(answer, No):
        return "No"
    if isinstance(answer, Counterexample):
        return f"CE {render_point(answer.point)}"
    if isinstance(answer, Positive):
        return f"Pos {render_point(answer.point)}"
    if isinstance(answer, NoSuchExample):
        return "NoSuchExample"
    if isinstance(answer, Labeled):
        return f"Label {render_point(answer.point)} {str(answer.label).lower()}"
    return repr(answer)


def render_transcript(transcript: Sequence[TranscriptEntry]) -> List[str]:
    """
    Render a transcript in the line-oriented golden-test form.

    Returns:
        Lines of the form ``<index> <kind> <payload> -> <answer>``
    """
    return [
        f"{i} {render_query(e.query)} -> {render_answer(e.answer)}"
        for i, e in enumerate(transcript)
    ]
