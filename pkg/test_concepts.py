"""
Tests for the concept classes, their composites and the concept syntax.
"""

import pytest
from hypothesis import given, strategies as st
from src.concepts import (
    FiniteSets,
    Intervals,
    PrefixClass,
    ProductClass,
    Singletons,
    UnionClass,
    all_negative_profile,
    build_class,
    contains,
    diff_witness,
    negative_profile,
    subset_of,
    witness,
)
from src.core.errors import ConceptSyntaxError, ConfigError, UniverseMismatch
from src.learners import reference_spec
from src.models.concepts import (
    ClassId,
    Empty,
    FiniteSet,
    Interval,
    Pair,
    PrefixConcept,
    ProductConcept,
    Singleton,
    Tagged,
    UnionConcept,
    Vector,
)
from src.models.queries import QueryKind
from src.utils.concept_syntax import (
    parse_class,
    parse_concept,
    parse_point,
    render_concept,
    render_point,
    render_symbols,
)


def test_prefix_membership_closed_form():
    """(t, a) is in c(s) iff t == s, or t is a strict prefix of s and a differs from the next symbol"""
    cls = PrefixClass(8, 3)
    target = PrefixConcept(s=(1, 2))
    assert cls.contains(target, Pair((), 0))
    assert not cls.contains(target, Pair((), 1))
    assert cls.contains(target, Pair((1,), 3))
    assert not cls.contains(target, Pair((1,), 2))
    assert cls.contains(target, Pair((1, 2), 7))
    assert not cls.contains(target, Pair((1, 2, 0), 0))
    assert not cls.contains(target, Pair((2,), 0))


def recursive_prefix_concept(s, size):
    """Points of c(s) built by peeling one symbol at a time off the end of s."""
    points = {Pair(tuple(s), b) for b in range(size)}
    while s:
        s, a = s[:-1], s[-1]
        points |= {Pair(tuple(s), b) for b in range(size) if b != a}
    return points


def test_prefix_closed_form_matches_the_recursive_construction():
    cls = PrefixClass(3, 3)
    universe = list(cls.universe())
    for s in cls.strings():
        expected = recursive_prefix_concept(s, 3)
        assert {x for x in universe if cls.contains(PrefixConcept(s=s), x)} == expected
        assert set(cls.members(PrefixConcept(s=s))) == expected


def test_prefix_concepts_are_subsets_only_of_themselves():
    cls = PrefixClass(2, 2)
    for s in cls.strings():
        for t in cls.strings():
            inside = recursive_prefix_concept(s, 2) <= recursive_prefix_concept(t, 2)
            assert inside == (s == t)
            assert cls.subset_of(PrefixConcept(s=s), PrefixConcept(s=t)) == inside


def test_prefix_members_agree_with_contains():
    cls = PrefixClass(3, 2)
    for c in cls.concepts():
        members = set(cls.members(c))
        assert members == {x for x in cls.universe() if cls.contains(c, x)}


def test_interval_subset_and_witness_examples(intervals16):
    a, b = Interval(lo=2, hi=5), Interval(lo=4, hi=9)
    assert intervals16.subset_of(Interval(lo=3, hi=4), a)
    assert not intervals16.subset_of(a, b)
    assert intervals16.diff_witness(a, b) == 2
    assert intervals16.diff_witness(b, a) == 6
    assert intervals16.diff_witness(Interval(lo=3, hi=4), a) is None
    assert witness(intervals16, b) == 4


@given(st.integers(0, 11), st.integers(0, 11), st.integers(0, 11), st.integers(0, 11))
def test_interval_diff_witness_matches_enumeration(a, b, c, d):
    """The closed-form witness is the least member of the difference"""
    cls = Intervals(12)
    c1 = Interval(lo=min(a, b), hi=max(a, b))
    c2 = Interval(lo=min(c, d), hi=max(c, d))
    expected = next((x for x in cls.members(c1) if not cls.contains(c2, x)), None)
    assert cls.diff_witness(c1, c2) == expected
    assert cls.subset_of(c1, c2) == (expected is None)


def test_product_membership_and_witness(rectangles16):
    target = ProductConcept(parts=(Interval(lo=3, hi=5), Interval(lo=2, hi=8)))
    assert rectangles16.contains(target, Vector((4, 2)))
    assert not rectangles16.contains(target, Vector((6, 2)))
    assert rectangles16.witness(target) == Vector((3, 2))
    query = ProductConcept(parts=(Interval(lo=3, hi=5), Interval(lo=3, hi=8)))
    assert rectangles16.diff_witness(target, query) == Vector((3, 2))
    assert rectangles16.diff_witness(query, target) is None


def test_empty_product_is_a_subset_of_everything():
    """A product with one empty component has no members at all"""
    cls = ProductClass([Intervals(8, with_empty=True), Intervals(8, with_empty=True)])
    hollow = ProductConcept(parts=(Empty(), Interval(lo=0, hi=7)))
    full = ProductConcept(parts=(Interval(lo=0, hi=7), Interval(lo=0, hi=7)))
    assert cls.is_empty(hollow)
    assert cls.subset_of(hollow, ProductConcept(parts=(Interval(lo=1, hi=1), Empty())))
    assert not cls.subset_of(full, hollow)
    assert cls.contains_empty


@pytest.mark.parametrize("k, size", [(2, 3), (3, 2)])
def test_product_subset_matches_enumeration(k, size):
    """c1 <= c2 iff every component is contained, or some component of c1 is empty"""
    cls = ProductClass([Intervals(size, with_empty=True) for _ in range(k)])
    universe = list(cls.universe())
    concepts = list(cls.concepts())
    for c1 in concepts:
        members = [x for x in universe if cls.contains(c1, x)]
        for c2 in concepts:
            extensional = all(cls.contains(c2, x) for x in members)
            componentwise = all(part.subset_of(a, b) for part, a, b in zip(cls.parts, c1.parts, c2.parts))
            some_empty = any(part.is_empty(a) for part, a in zip(cls.parts, c1.parts))
            assert cls.subset_of(c1, c2) == extensional
            assert extensional == (componentwise or some_empty)


def test_union_is_tagged(union_of_intervals):
    left = UnionConcept(parts=(Interval(lo=1, hi=3), Interval(lo=5, hi=6)))
    right = UnionConcept(parts=(Interval(lo=1, hi=3), Interval(lo=5, hi=7)))
    assert union_of_intervals.contains(left, Tagged(1, 6))
    assert not union_of_intervals.contains(left, Tagged(0, 6))
    assert union_of_intervals.diff_witness(right, left) == Tagged(1, 7)
    assert union_of_intervals.diff_witness(left, right) is None
    assert not union_of_intervals.contains_empty


def test_validated_operations_reject_foreign_inputs():
    cls = Intervals(8)
    with pytest.raises(UniverseMismatch):
        contains(cls, Interval(lo=0, hi=2), 9)
    with pytest.raises(UniverseMismatch):
        subset_of(cls, Interval(lo=0, hi=9), Interval(lo=0, hi=2))
    with pytest.raises(UniverseMismatch):
        diff_witness(cls, Empty(), Interval(lo=0, hi=2))
    assert contains(cls, Interval(lo=0, hi=2), 2)


def test_singleton_normalization():
    cls = Singletons(4)
    assert cls.normalize(FiniteSet(elements=frozenset({2}))) == Singleton(j=2)
    assert list(cls.universe()) == [0, 1, 2, 3, 4]
    assert not cls.contains_empty


def test_finite_sets_normalize_other_forms():
    cls = FiniteSets(4)
    assert cls.normalize(Empty()) == FiniteSet()
    assert cls.normalize(Interval(lo=1, hi=2)) == FiniteSet(elements=frozenset({1, 2}))
    assert sum(1 for _ in cls.concepts()) == 16


def test_all_negative_profile_for_singletons():
    """All-No answers drive the singleton Mem learner to {m}"""
    profile = negative_profile(reference_spec(Singletons(3), QueryKind.MEM))
    assert profile.queries == (0, 1, 2)
    assert all_negative_profile(reference_spec(Singletons(3), QueryKind.MEM)) == (Singleton(j=3), 3)


def test_all_negative_profile_without_a_nonempty_hypothesis():
    """Intervals have no concept consistent with every point being negative"""
    assert all_negative_profile(reference_spec(Intervals(8), QueryKind.MEM)) is None
    assert all_negative_profile(reference_spec(Intervals(8, with_empty=True), QueryKind.MEM)) is None


def test_all_negative_profile_rejects_other_learners():
    with pytest.raises(ValueError):
        negative_profile(reference_spec(Intervals(8), QueryKind.SUP))


def test_parse_class_specs():
    rectangles = parse_class("prod(intervals(16),intervals(16))")
    assert rectangles == ClassId(
        name="prod", parts=(ClassId(name="intervals", size=16), ClassId(name="intervals", size=16))
    )
    assert parse_class("prefix(8,3)") == ClassId(name="prefix", size=8, max_len=3)
    assert parse_class("letters") == ClassId(name="letters")


@pytest.mark.parametrize("text", ["", "intervals", "prefix(8)", "prod()", "intervals(16) x", "bogus(3)"])
def test_parse_class_rejects_malformed_specs(text):
    with pytest.raises(ConceptSyntaxError):
        parse_class(text)


def test_parse_concept_specs():
    assert parse_concept("prod([3,5],[2,8])") == ProductConcept(
        parts=(Interval(lo=3, hi=5), Interval(lo=2, hi=8))
    )
    assert parse_concept('c("12")') == PrefixConcept(s=(1, 2))
    assert parse_concept("{a,b}") == FiniteSet(elements=frozenset({"a", "b"}))
    assert parse_concept("union([1,3],empty)") == UnionConcept(parts=(Interval(lo=1, hi=3), Empty()))


@pytest.mark.parametrize("text", ["[5,3]", "[1,", "c(", "prod([1,2]", "[1,2] [3,4]"])
def test_parse_concept_rejects_malformed_specs(text):
    with pytest.raises(ConceptSyntaxError):
        parse_concept(text)


def test_parse_points():
    assert parse_point("(4,2)") == Vector((4, 2))
    assert parse_point("(a,-3)") == Vector(("a", -3))
    assert parse_point("tag(1,4)") == Tagged(1, 4)


def test_rendering():
    assert render_concept(Singleton(j=2)) == "{2}"
    assert render_concept(PrefixConcept(s=(1, 2))) == 'c("12")'
    assert render_concept(ProductConcept(parts=(Interval(lo=3, hi=5), Empty()))) == "prod([3,5],empty)"
    assert render_point(Pair((), 3)) == "(λ,3)"
    assert render_point(Vector((Pair((1,), 2), Pair((), 0)))) == '(("1",2),(λ,0))'
    assert render_symbols((1, 13)) == "1.13"


@given(st.integers(0, 14), st.integers(0, 14), st.integers(0, 14), st.integers(0, 14))
def test_rendered_concepts_parse_back(a, b, c, d):
    concept = ProductConcept(
        parts=(Interval(lo=min(a, b), hi=max(a, b)), Interval(lo=min(c, d), hi=max(c, d)))
    )
    assert parse_concept(render_concept(concept)) == concept


def test_build_class():
    cls = build_class(parse_class("prod(singletons(2),intervals(4))"))
    assert isinstance(cls, ProductClass)
    assert isinstance(cls.parts[0], Singletons) and isinstance(cls.parts[1], Intervals)
    assert build_class(parse_class("intervals(4)")) is build_class(parse_class("intervals(4)"))
    assert isinstance(build_class(parse_class("union(intervals(4),intervals(4))")), UnionClass)
    assert build_class(parse_class("intervals_or_empty(4)")).contains_empty


def test_build_class_caps_enumerated_finite_sets():
    with pytest.raises(ConfigError):
        build_class(parse_class("finitesets(13)"))
