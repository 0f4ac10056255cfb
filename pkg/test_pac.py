"""
Tests for PAC learning of cross-products: bounds, sampling, the subconcept search and seeded trials.
"""

import math
import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError
from src.concepts import Intervals, ProductClass, Singletons
from src.core.errors import DomainError, UniverseMismatch, UnsupportedQuery
from src.core.oracle import HonestOracle
from src.models.concepts import Empty, Interval, ProductConcept, Singleton, Vector
from src.models.pac import PacParams, TrialReport
from src.models.queries import Labeled, Query
from src.pac import (
    Distribution,
    EnumerationFinder,
    ExampleOracle,
    IntervalFinder,
    draw_sample,
    exact_error,
    find_subconcepts,
    finder_for,
    growth_bound,
    growth_upper,
    pac_learn_product,
    pac_learn_with_mem,
    reports_to_csv,
    run_pac_trials,
    sample_size,
    summarize_trials,
    vc_product_bound,
)

RECTANGLE = ProductConcept(parts=(Interval(lo=3, hi=5), Interval(lo=2, hi=8)))


def interval_finders(size=16):
    axis = Intervals(size)
    return IntervalFinder(axis), IntervalFinder(axis)


def test_vc_product_bound_examples():
    assert vc_product_bound([2, 2], 2) == pytest.approx(18.78, abs=0.05)
    assert vc_product_bound([1, 1, 1], 3) == pytest.approx(16.87, abs=0.05)


def test_vc_product_bound_domain():
    with pytest.raises(DomainError):
        vc_product_bound([2], 0)
    with pytest.raises(DomainError):
        vc_product_bound([2, -1], 2)


def test_sample_size_example():
    """b=4, d=4, epsilon=delta=0.1 needs 461 examples"""
    assert sample_size(PacParams(epsilon=0.1, delta=0.1, b=4, d1=2, d2=2)) == 461


def test_pac_params_validation():
    with pytest.raises(ValidationError):
        PacParams(epsilon=1.0, delta=0.1)
    with pytest.raises(ValidationError):
        PacParams(epsilon=0.1, delta=0.0)
    with pytest.raises(ValidationError):
        PacParams(epsilon=0.1, delta=0.1, d1=-1)


def test_growth_bound_examples():
    assert growth_bound(4, 2) == pytest.approx(29.56, abs=0.05)
    assert growth_bound(10, 1) == pytest.approx(27.18, abs=0.05)


@pytest.mark.parametrize("m,d", [(3, 2), (2, 1), (5, 0)])
def test_growth_bound_domain(m, d):
    with pytest.raises(DomainError):
        growth_bound(m, d)


def test_interval_dichotomies_of_four_points_stay_under_the_growth_bound():
    points = [1, 4, 9, 13]
    labelings = {
        tuple(c.lo <= x <= c.hi for x in points) for c in Intervals(16).concepts()
    } | {(False,) * 4}
    assert len(labelings) == 11
    assert len(labelings) <= growth_bound(4, 2)


def test_growth_upper_covers_small_samples():
    assert growth_upper(0, 2) == 1.0
    assert growth_upper(5, 0) == 1.0
    assert growth_upper(2, 2) == 4.0
    assert growth_upper(10, 1) == pytest.approx(10 * math.e)


def test_distribution_weights():
    dist = Distribution([0, 1], [1, 3])
    assert dist.probability([False, True]) == pytest.approx(0.75)
    assert len(Distribution.uniform(Intervals(4))) == 4


@pytest.mark.parametrize("points,weights", [([], None), ([0, 1], [1]), ([0, 1], [0, 0]), ([0, 1], [-1, 2])])
def test_distribution_rejects_bad_tables(points, weights):
    with pytest.raises(DomainError):
        Distribution(points, weights)


def test_draw_sample_positive_fraction(rectangles16):
    """About 21/256 of uniform draws fall inside [3,5]x[2,8]"""
    dist = Distribution.uniform(rectangles16)
    sample = draw_sample(dist, rectangles16, RECTANGLE, 10_000, seed=11)
    p = 21 / 256
    sigma = math.sqrt(p * (1 - p) / 10_000)
    assert len(sample) == 10_000
    assert abs(len(sample.positives) / 10_000 - p) <= 4 * sigma
    assert all(rectangles16.contains(RECTANGLE, x) == label for x, label in sample.entries)


def test_draw_sample_is_seeded(rectangles16):
    dist = Distribution.uniform(rectangles16)
    first = draw_sample(dist, rectangles16, RECTANGLE, 50, seed=3)
    assert draw_sample(dist, rectangles16, RECTANGLE, 50, seed=3).entries == first.entries
    with pytest.raises(DomainError):
        draw_sample(dist, rectangles16, RECTANGLE, -1, seed=3)


def test_example_oracle(rectangles16):
    oracle = ExampleOracle(rectangles16, RECTANGLE, Distribution.uniform(rectangles16), seed=5)
    answer = oracle.answer(Query.ex())
    assert isinstance(answer, Labeled)
    assert answer.label == rectangles16.contains(RECTANGLE, answer.point)
    oracle.draw(9)
    assert oracle.calls == 10
    with pytest.raises(UnsupportedQuery):
        oracle.answer(Query.mem(Vector((3, 2))))


def test_exact_error(rectangles16):
    dist = Distribution.uniform(rectangles16)
    assert exact_error(dist, rectangles16, RECTANGLE, RECTANGLE) == 0.0
    smaller = ProductConcept(parts=(Interval(lo=3, hi=5), Interval(lo=2, hi=7)))
    assert exact_error(dist, rectangles16, RECTANGLE, smaller) == pytest.approx(3 / 256)


def test_interval_finder():
    finder = IntervalFinder(Intervals(8))
    assert finder.find([(2, True), (5, True), (7, False)]) == Interval(lo=2, hi=5)
    assert finder.find([(2, True), (5, True), (3, False)]) is None
    assert finder.find([(0, False), (1, False)]) == Interval(lo=2, hi=2)
    assert finder.find([(x, False) for x in range(8)]) is None
    assert IntervalFinder(Intervals(8, with_empty=True)).find([(0, False)]) == Empty()


def test_enumeration_finder():
    finder = EnumerationFinder(Singletons(3))
    assert finder.find([(2, True)]) == Singleton(j=2)
    assert finder.find([(1, True), (2, True)]) is None
    assert finder.find([(0, False)]) == Singleton(j=1)


def test_finder_for():
    assert isinstance(finder_for(Intervals(8)), IntervalFinder)
    assert isinstance(finder_for(Intervals(8, with_empty=True)), IntervalFinder)
    assert isinstance(finder_for(Singletons(3)), EnumerationFinder)


def test_find_subconcepts_blames_each_negative():
    f1, f2 = interval_finders()
    search = find_subconcepts([(3, 4)], [(7, 4), (3, 9)], 0.12, f1, f2)
    assert search.pair == (Interval(lo=3, hi=3), Interval(lo=4, hi=4))
    assert search.nodes == 2
    assert search.epsilon_prime == pytest.approx(1 / 3)
    assert search.delta_prime == pytest.approx(0.01)


def test_find_subconcepts_reports_inconsistent_samples():
    f1, f2 = interval_finders()
    search = find_subconcepts([(3, 4)], [(3, 4)], 0.1, f1, f2)
    assert not search.found
    assert search.pair is None


def test_find_subconcepts_on_an_empty_sample():
    f1, f2 = interval_finders()
    search = find_subconcepts([], [], 0.1, f1, f2)
    assert search.found
    assert search.epsilon_prime == 1.0
    assert search.delta_prime == pytest.approx(0.1)


labeled_points = st.lists(
    st.tuples(st.integers(0, 7), st.integers(0, 7), st.booleans()), max_size=12
).filter(lambda entries: sum(1 for *_, label in entries if not label) <= 8)


@settings(max_examples=200, deadline=None)
@given(labeled_points)
def test_find_subconcepts_agrees_with_brute_force(entries):
    """A pair is found exactly when some rectangle on the 8x8 grid fits the sample"""
    axis = Intervals(8)
    cls = ProductClass([axis, axis])
    splus = [Vector((x, y)) for x, y, label in entries if label]
    sminus = [Vector((x, y)) for x, y, label in entries if not label]
    search = find_subconcepts(splus, sminus, 0.1, IntervalFinder(axis), IntervalFinder(axis))

    def fits(c):
        return all(cls.contains(c, Vector((x, y))) == label for x, y, label in entries)

    assert search.found == any(fits(c) for c in cls.concepts())
    if search.found:
        assert fits(ProductConcept(parts=search.pair))
    n = len(sminus)
    assert search.nodes <= n * growth_upper(n, 2)


def test_pac_learn_product_on_a_rectangle(rectangles16):
    params = PacParams(epsilon=0.2, delta=0.2, d1=2, d2=2)
    dist = Distribution.uniform(rectangles16)
    oracle = ExampleOracle(rectangles16, RECTANGLE, dist, seed=1)
    outcome = pac_learn_product(params, oracle, *interval_finders())
    assert outcome.sample_size == sample_size(params)
    assert oracle.calls == outcome.sample_size
    assert rectangles16.subset_of(outcome.hypothesis, RECTANGLE)
    assert exact_error(dist, rectangles16, RECTANGLE, outcome.hypothesis) <= 0.2


def test_pac_learn_product_needs_a_two_fold_product():
    axis = Intervals(16)
    oracle = ExampleOracle(axis, Interval(lo=3, hi=5), Distribution.uniform(axis))
    with pytest.raises(UniverseMismatch):
        pac_learn_product(PacParams(epsilon=0.2, delta=0.2), oracle, *interval_finders())


def test_pac_learners_answer_empty_without_positives():
    axis = Intervals(8, with_empty=True)
    cls = ProductClass([axis, axis])
    target = ProductConcept(parts=(Empty(), Interval(lo=1, hi=2)))
    dist = Distribution.uniform(cls)
    params = PacParams(epsilon=0.2, delta=0.2)
    finders = [IntervalFinder(axis), IntervalFinder(axis)]

    assert pac_learn_product(params, ExampleOracle(cls, target, dist), *finders).hypothesis == Empty()
    outcome = pac_learn_with_mem(params, ExampleOracle(cls, target, dist), HonestOracle(cls, target), 2, finders)
    assert outcome.hypothesis == Empty()
    assert outcome.mem_queries == 0


def test_pac_learn_with_mem_labels_are_sound(rectangles16):
    params = PacParams(epsilon=0.2, delta=0.2, d1=2, d2=2)
    oracle = ExampleOracle(rectangles16, RECTANGLE, Distribution.uniform(rectangles16), seed=4)
    outcome = pac_learn_with_mem(params, oracle, HonestOracle(rectangles16, RECTANGLE), 2, interval_finders())
    m = outcome.sample_size
    assert outcome.mem_queries <= 2 * m
    for part, target_part, labels in zip(rectangles16.parts, RECTANGLE.parts, outcome.labels):
        assert all(part.contains(target_part, x) == label for x, label in labels)
    assert rectangles16.subset_of(outcome.hypothesis, RECTANGLE)


def test_pac_learn_with_mem_single_dimension():
    axis = Intervals(16)
    cls = ProductClass([axis])
    target = ProductConcept(parts=(Interval(lo=3, hi=5),))
    params = PacParams(epsilon=0.2, delta=0.2, d1=2)
    oracle = ExampleOracle(cls, target, Distribution.uniform(cls), seed=2)
    outcome = pac_learn_with_mem(params, oracle, HonestOracle(cls, target), 1, [IntervalFinder(axis)])
    assert outcome.mem_queries == 0
    assert cls.subset_of(outcome.hypothesis, target)


def test_pac_learn_with_mem_checks_finder_count(rectangles16):
    oracle = ExampleOracle(rectangles16, RECTANGLE, Distribution.uniform(rectangles16))
    with pytest.raises(DomainError):
        pac_learn_with_mem(
            PacParams(epsilon=0.2, delta=0.2), oracle, HonestOracle(rectangles16, RECTANGLE), 2, interval_finders()[:1]
        )


@pytest.mark.parametrize("with_mem", [False, True])
def test_pac_trials_meet_the_confidence_threshold(with_mem):
    """Rectangles on a 16x16 grid, epsilon=delta=0.2, 200 seeded trials"""
    reports = run_pac_trials(PacParams(epsilon=0.2, delta=0.2), 200, seed=0, grid=16, with_mem=with_mem)
    summary = summarize_trials(reports, 0.2)
    assert summary.trials == 200
    assert summary.passed
    assert summary.failure_rate <= 0.2 + 3 * math.sqrt(0.2 * 0.8 / 200)
    assert [r.seed for r in reports] == list(range(200))


def test_pac_trials_replay_by_seed():
    params = PacParams(epsilon=0.2, delta=0.2)
    batch = run_pac_trials(params, 5, seed=10)
    assert run_pac_trials(params, 1, seed=13)[0] == batch[3]


def report(error):
    return TrialReport(seed=0, m=1, epsilon=0.2, delta=0.2, error=error, nodes=0, mem_queries=0)


def test_summarize_trials_threshold():
    passing = summarize_trials([report(0.3)] * 40 + [report(0.0)] * 160, 0.2)
    assert passing.failures == 40
    assert passing.threshold == pytest.approx(0.2 + 3 * math.sqrt(0.16 / 200))
    assert passing.passed
    assert not summarize_trials([report(0.3)] * 60 + [report(0.0)] * 140, 0.2).passed


def test_reports_to_csv():
    text = reports_to_csv([report(0.05)])
    lines = text.splitlines()
    assert lines[0] == "seed,m,epsilon,delta,error,nodes,mem_queries"
    assert lines[1] == "0,1,0.2,0.2,0.05,0,0"
