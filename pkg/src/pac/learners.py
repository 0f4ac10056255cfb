"""
PAC learners for cross-products: sample-only and membership-query assisted.
"""

from typing import Any, Dict, List, Sequence, Tuple
import logging
from src.concepts.composite import ProductClass
from src.core.errors import DomainError, NoConsistentHypothesis, UniverseMismatch
from src.core.learner import membership_answer
from src.core.oracle import Oracle
from src.models.concepts import Empty, ProductConcept, Vector
from src.models.pac import PacOutcome, PacParams
from src.models.queries import Query
from src.pac.bounds import sample_size
from src.pac.distribution import ExampleOracle
from src.pac.finders import ConsistencyFinder
from src.pac.subconcepts import find_subconcepts

logger = logging.getLogger(__name__)


def _product_class(ex_oracle: ExampleOracle, k: int) -> ProductClass:
    cls = ex_oracle.concept_class
    if not isinstance(cls, ProductClass) or cls.k != k:
        raise UniverseMismatch(f"expected a {k}-fold product class, got {cls}")
    return cls


def pac_learn_product(
    params: PacParams, ex_oracle: ExampleOracle, f1: ConsistencyFinder, f2: ConsistencyFinder
) -> PacOutcome:
    """
    PAC-learn a two-fold cross-product from labeled examples only.

    Args:
        params: Accuracy, confidence and sizing constants
        ex_oracle: Example oracle over a two-fold product class
        f1: Finder for the first component
        f2: Finder for the second component

    Returns:
        The hypothesis, the sample size and the search node count

    Raises:
        NoConsistentHypothesis: If no product is consistent with the sample
    """
    cls = _product_class(ex_oracle, 2)
    m = sample_size(params)
    sample = ex_oracle.draw(m)
    if not sample.positives and cls.contains_empty:
        logger.info(f"no positives among {m} examples, answering the empty concept")
        return PacOutcome(hypothesis=Empty(), sample_size=m)

    search = find_subconcepts(sample.positives, sample.negatives, params.delta, f1, f2)
    if not search.found:
        raise NoConsistentHypothesis(f"no product of component concepts fits the {m} drawn examples")
    hypothesis = cls.normalize(ProductConcept(parts=search.pair))
    logger.info(f"pac_learn_product: m={m} nodes={search.nodes} hypothesis={cls.render_concept(hypothesis)}")
    return PacOutcome(hypothesis=hypothesis, sample_size=m, nodes=search.nodes)


def _blame_one_dimension(
    negatives: List[Vector], subfinders: Sequence[ConsistencyFinder], epsilon: float, delta: float
):
    # Without a positive, one dimension excluding every negative coordinate suffices.
    for i, finder in enumerate(subfinders):
        ci = finder.find([(x[i], False) for x in negatives], epsilon, delta)
        if ci is None:
            continue
        rest = [f.find([], epsilon, delta) for j, f in enumerate(subfinders) if j != i]
        if all(c is not None for c in rest):
            return tuple(rest[:i]) + (ci,) + tuple(rest[i:])
    return None


def pac_learn_with_mem(
    params: PacParams,
    ex_oracle: ExampleOracle,
    mem_oracle: Oracle,
    k: int,
    subfinders: Sequence[ConsistencyFinder],
) -> PacOutcome:
    """
    PAC-learn a k-fold cross-product, splitting negatives per dimension with Mem queries.

    With a positive example ``p`` in the sample, a negative ``x`` labels ``x[i]``
    in dimension ``i`` by the answer to ``Mem(p[i <- x[i]])``. Each subfinder then
    runs on its own labeled set with accuracy ``epsilon/k`` and confidence
    ``delta/k``.

    Args:
        params: Accuracy, confidence and sizing constants
        ex_oracle: Example oracle over a k-fold product class
        mem_oracle: Oracle answering Mem queries for the same target
        k: Number of components
        subfinders: One finder per component

    Returns:
        The hypothesis, the Mem count and the per-dimension labeled sets

    Raises:
        DomainError: If ``k`` does not match the number of subfinders
        NoConsistentHypothesis: If some component admits no consistent concept
    """
    if k < 1 or len(subfinders) != k:
        raise DomainError(f"need one subfinder per dimension, got k={k} and {len(subfinders)} finders")
    cls = _product_class(ex_oracle, k)
    m = sample_size(params)
    sample = ex_oracle.draw(m)
    epsilon, delta = params.epsilon / k, params.delta / k

    if k == 1:
        labels = [[(x[0], label) for x, label in sample.entries]]
        c = subfinders[0].find(labels[0], epsilon, delta)
        if c is None:
            raise NoConsistentHypothesis("no concept fits the drawn examples")
        return PacOutcome(hypothesis=ProductConcept(parts=(c,)), sample_size=m, labels=labels)

    positives = sample.positives
    if not positives:
        if cls.contains_empty:
            logger.info(f"no positives among {m} examples, answering the empty concept")
            return PacOutcome(hypothesis=Empty(), sample_size=m)
        if k == 2:
            search = find_subconcepts([], sample.negatives, params.delta, subfinders[0], subfinders[1])
            parts, nodes = search.pair, search.nodes
        else:
            parts, nodes = _blame_one_dimension(sample.negatives, subfinders, epsilon, delta), 0
        if parts is None:
            raise NoConsistentHypothesis(f"no product of component concepts fits the {m} drawn examples")
        return PacOutcome(hypothesis=cls.normalize(ProductConcept(parts=parts)), sample_size=m, nodes=nodes)

    p = positives[0]
    labels: List[List[Tuple[Any, bool]]] = [[(q[i], True) for q in positives] for i in range(k)]
    asked: Dict[Vector, bool] = {}
    for x in sample.negatives:
        for i in range(k):
            if x[i] == p[i]:
                continue
            swapped = p.replace(i, x[i])
            if swapped not in asked:
                asked[swapped] = membership_answer(mem_oracle.answer(Query.mem(swapped)))
            labels[i].append((x[i], asked[swapped]))

    parts = []
    for i, finder in enumerate(subfinders):
        ci = finder.find(labels[i], epsilon, delta)
        if ci is None:
            raise NoConsistentHypothesis(f"no concept of component {i} fits its {len(labels[i])} labels")
        parts.append(ci)
    hypothesis = cls.normalize(ProductConcept(parts=tuple(parts)))
    logger.info(f"pac_learn_with_mem: m={m} mem={len(asked)} hypothesis={cls.render_concept(hypothesis)}")
    return PacOutcome(hypothesis=hypothesis, sample_size=m, mem_queries=len(asked), labels=labels)
