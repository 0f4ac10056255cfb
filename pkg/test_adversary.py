"""
Tests for the adversarial oracles and the lower-bound constructions.
"""

import pytest
from src.adversary import (
    AdversarialPosOracle,
    AdversarialPrefixOracle,
    AdversarialSingletonOracle,
    FreshValueSource,
    JustifiabilityLog,
    consistent_concepts,
    count_justifiable,
)
from src.concepts import Intervals, PairDemo, PrefixClass, ProductClass
from src.core.errors import (
    BudgetExhausted,
    FreshValuesExhausted,
    PreconditionUnmet,
    UniverseExhausted,
    UniverseMismatch,
    UnsupportedQuery,
)
from src.core.session import run_session
from src.learners import EliminationLearner, MemOnlyProductLearner, reference_spec, singleton_concept
from src.models.concepts import Pair, PrefixConcept, ProductConcept, Vector
from src.models.queries import Counterexample, No, Positive, Query, QueryKind, Yes


def prefix_product(k, size=16, max_len=2):
    return ProductClass([PrefixClass(size, max_len) for _ in range(k)])


def test_pos_adversary_repeats_the_letter_a():
    oracle = AdversarialPosOracle(PairDemo(4))
    assert oracle.answer(Query.pos()) == Positive(point=Vector(("a", 0)))
    assert oracle.answer(Query.pos()) == Positive(point=Vector(("a", 1)))


def test_pos_adversary_runs_out_of_values():
    oracle = AdversarialPosOracle(PairDemo(2))
    oracle.answer(Query.pos())
    oracle.answer(Query.pos())
    with pytest.raises(UniverseExhausted):
        oracle.answer(Query.pos())


def test_pos_adversary_answers_only_positive_queries():
    with pytest.raises(UnsupportedQuery):
        AdversarialPosOracle(PairDemo(4)).answer(Query.mem(Vector(("a", 0))))


@pytest.mark.parametrize("answers", [5, 20])
def test_pos_adversary_keeps_two_concepts_consistent(answers):
    cls = PairDemo(20)
    oracle = AdversarialPosOracle(cls)
    for _ in range(answers):
        oracle.answer(Query.pos())
    assert len(consistent_concepts(cls, oracle.issued)) >= 2


def test_pos_lowerbound_report(service):
    report = service.pos_lowerbound(4)
    assert report["answers"] == 20
    assert report["consistent"] == 2
    assert report["ok"]


def test_singleton_adversary_returns_the_queried_point():
    oracle = AdversarialSingletonOracle(2, 2)
    assert oracle.answer(Query.eq(singleton_concept(Vector((0, 0))))) == Counterexample(point=Vector((0, 0)))
    assert oracle.answer(Query.sub(singleton_concept(Vector((0, 1))))) == Counterexample(point=Vector((0, 1)))
    assert oracle.answer(Query.mem(Vector((0, 2)))) == No()
    assert oracle.consistent_count == 6


def test_singleton_adversary_commits_to_the_last_candidate():
    oracle = AdversarialSingletonOracle(1, 2)
    for x in [(0, 0), (0, 1), (1, 0)]:
        assert oracle.answer(Query.mem(Vector(x))) == No()
    assert oracle.committed
    assert oracle.target == Vector((1, 1))
    assert oracle.answer(Query.mem(Vector((1, 1)))) == Yes()
    assert oracle.answer(Query.eq(singleton_concept(Vector((0, 0))))) == Counterexample(point=Vector((0, 0)))


def test_singleton_adversary_rejects_superset_queries():
    oracle = AdversarialSingletonOracle(2, 2)
    with pytest.raises(UnsupportedQuery):
        oracle.answer(Query.sup(singleton_concept(Vector((0, 0)))))


@pytest.mark.parametrize("mode", [QueryKind.MEM, QueryKind.SUB, QueryKind.EQ])
def test_singleton_lowerbound_needs_every_candidate(service, mode):
    """m=2, k=2: eight queries, and two candidates survive seven of them"""
    report = service.singleton_lowerbound(2, 2, mode)
    assert report["queries"] == 8
    assert report["bound"] == 8
    assert report["consistent_after_bound_minus_one"] >= 2
    assert report["ok"]


SINGLETON_LEARNERS = {
    "elimination-mem": lambda cls: EliminationLearner(cls, QueryKind.MEM),
    "elimination-sub": lambda cls: EliminationLearner(cls, QueryKind.SUB),
    "elimination-eq": lambda cls: EliminationLearner(cls, QueryKind.EQ),
    "mem-only-product": lambda cls: MemOnlyProductLearner(
        cls, [reference_spec(part, QueryKind.MEM) for part in cls.parts]
    ),
}


@pytest.mark.parametrize("build", list(SINGLETON_LEARNERS.values()), ids=list(SINGLETON_LEARNERS))
def test_singleton_adversary_holds_every_learner_to_eight_queries(build):
    oracle = AdversarialSingletonOracle(2, 2)
    result = run_session(build(oracle.concept_class), oracle, 1_000)
    assert result.stats.total >= 8
    assert result.hypothesis == singleton_concept(oracle.target)

    short = AdversarialSingletonOracle(2, 2)
    with pytest.raises(BudgetExhausted):
        run_session(build(short.concept_class), short, 7)
    assert short.consistent_count >= 2
    assert not short.committed


def test_prefix_adversary_first_answer():
    oracle = AdversarialPrefixOracle(prefix_product(2))
    root = ProductConcept(parts=(PrefixConcept(s=()), PrefixConcept(s=())))
    answer = oracle.answer(Query.sub(root))
    assert answer == Counterexample(point=Vector((Pair((), 1), Pair((), 2))))
    assert oracle.answer(Query.eq(root)) == answer


def test_prefix_adversary_answers_with_values_unseen_in_queries():
    oracle = AdversarialPrefixOracle(prefix_product(2))
    query = ProductConcept(parts=(PrefixConcept(s=(1,)), PrefixConcept(s=(2,))))
    answer = oracle.answer(Query.eq(query))
    assert [x.value for x in answer.point] == [3, 4]


def test_prefix_adversary_rejects_other_classes_and_queries():
    with pytest.raises(UniverseMismatch):
        AdversarialPrefixOracle(ProductClass([Intervals(8), Intervals(8)]))
    with pytest.raises(UnsupportedQuery):
        AdversarialPrefixOracle(prefix_product(2)).answer(Query.mem(Vector((Pair((), 0), Pair((), 0)))))


def test_fresh_values():
    fresh = FreshValueSource(4)
    fresh.observe([1])
    assert fresh.take() == 2
    assert fresh.take() == 3
    with pytest.raises(FreshValuesExhausted):
        fresh.take()


def test_count_justifiable_requires_lower_levels_to_be_queried():
    log = JustifiabilityLog(2)
    assert count_justifiable(log, 0) == 1
    with pytest.raises(PreconditionUnmet):
        count_justifiable(log, 1)


def test_justifiability_follows_answers():
    log = JustifiabilityLog(2)
    added = log.record(((), ()), Vector((Pair((), 1), Pair((), 2))))
    assert added == [((1,), ()), ((), (2,))]
    assert log.record(((5,), ()), Vector((Pair((5,), 3), Pair((), 4)))) == []
    assert count_justifiable(log, 1) == 2


@pytest.mark.parametrize("k,r", [(2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2)])
def test_prefix_lowerbound_counts_k_to_the_r(service, k, r):
    """Breadth-first queries leave k^r justifiable concepts at level r"""
    report = service.prefix_lowerbound(k, r, 4)
    assert report["justifiable"] == k**r
    assert report["certificate"] is not None
    assert report["ok"]


def test_prefix_lowerbound_tree(service):
    report = service.prefix_lowerbound(2, 1, 4, QueryKind.EQ)
    assert report["queries"] == 1
    assert report["tree"][0] == 'prod(c(""),c("")) -> ((λ,1),(λ,2))'
    assert len(report["tree"]) == 3
    assert report["tree"][1].startswith('  ["1" ≤ s1] prod(c("1"),c(""))')
