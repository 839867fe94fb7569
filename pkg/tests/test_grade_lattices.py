import pytest

from fractions import Fraction
from functools import reduce
from hypothesis import given, strategies as st

import fuzzy_lattice.config as config

from fuzzy_lattice.errors import EmptyAtomError, InvalidPairError, NotClosedError, RangeError, UnknownNameError
from fuzzy_lattice.grade_lattices import (
    GAMMA,
    OMEGA,
    PHI,
    ClosedSubset,
    Interval,
    IntervalEmbedding,
    MonotonePWA,
    closed_join,
    closed_leq,
    closed_meet,
    embed_unit_to_interval,
    graph_embedding,
    hesitant_inter,
    hesitant_union,
    interval_join,
    interval_leq,
    interval_meet,
    s_inter,
    s_order,
    s_union,
    xi,
)
from fuzzy_lattice.set_algebra import (
    EMPTY,
    IRRATIONALS,
    RATIONALS,
    Tag,
    format_subset,
    intersect,
    interval,
    points,
    segment,
    union,
)

rationals = st.fractions(min_value=0, max_value=1, max_denominator=16)


@st.composite
def intervals(draw):
    lo, hi = sorted((draw(rationals), draw(rationals)))
    return Interval(lo, hi)


class TestIntervals(object):

    def test_inverted_interval(self):
        with pytest.raises(EmptyAtomError):
            Interval(Fraction(1, 2), Fraction(1, 4))

        return

    def test_endpoint_range(self):
        with pytest.raises(RangeError):
            Interval(0, 2)

        return

    def test_componentwise_operators(self):
        a = Interval(Fraction(1, 5), Fraction(1, 2))
        b = Interval(Fraction(1, 4), Fraction(3, 10))

        assert interval_join(a, b) == Interval(Fraction(1, 4), Fraction(1, 2))
        assert interval_meet(a, b) == Interval(Fraction(1, 5), Fraction(3, 10))
        assert not interval_leq(a, b)
        assert not interval_leq(b, a)
        assert str(a) == "[1/5,1/2]"

        return

    pass


class TestEmbeddings(object):

    def test_standard_embeddings(self):
        t = Fraction(1, 3)

        assert PHI(t) == Interval(t, t)
        assert OMEGA(t) == Interval(t, 1)
        assert GAMMA(t) == Interval(0, t)
        assert embed_unit_to_interval(t, "omega") == Interval(t, 1)

        return

    def test_unknown_embedding(self):
        with pytest.raises(UnknownNameError):
            embed_unit_to_interval(Fraction(1, 3), "nope")

        return

    def test_graph_embedding(self):
        embedding = graph_embedding(MonotonePWA(config.GRAPH_F_BREAKPOINTS))

        assert embedding(Fraction(1, 4)) == Interval(Fraction(1, 4), Fraction(1, 2))
        assert embedding(1) == Interval(1, 1)

        return

    def test_pair_must_be_ordered(self):
        with pytest.raises(InvalidPairError):
            IntervalEmbedding(MonotonePWA.identity(), MonotonePWA.constant(Fraction(1, 2)))

        return

    def test_pair_needs_a_strict_map(self):
        with pytest.raises(InvalidPairError):
            IntervalEmbedding(MonotonePWA.constant(0), MonotonePWA.constant(1))

        return

    def test_monotone_map_validation(self):
        with pytest.raises(RangeError):
            MonotonePWA(((0, Fraction(1, 2)), (1, Fraction(1, 4))))
        with pytest.raises(RangeError):
            MonotonePWA(((Fraction(1, 4), 0), (1, 1)))

        return

    def test_monotone_map_equality_ignores_collinear_points(self):
        f = MonotonePWA(((0, 0), (Fraction(1, 2), Fraction(1, 2)), (1, 1)))

        assert f == MonotonePWA.identity()
        assert hash(f) == hash(MonotonePWA.identity())
        assert f(Fraction(1, 3)) == Fraction(1, 3)

        return

    def test_xi(self):
        result = xi(Interval(Fraction(1, 5), Fraction(1, 2)))
        expected = union(
            intersect(RATIONALS, segment(0, Fraction(1, 5))),
            intersect(IRRATIONALS, segment(0, Fraction(1, 2))),
        )

        assert result == expected
        assert format_subset(result) == "[0,1/5] | ((1/5,1/2)&II)"

        return

    def test_xi_of_zero(self):
        assert xi(Interval(0, 0)) == points(0)

        return

    @given(a=intervals(), b=intervals())
    def test_xi_is_injective(self, a, b):
        assert (xi(a) == xi(b)) == (a == b)

        return

    pass


class TestSetOrder(object):
    """Worked example: S = [3/10,7/10] and T = {2/5,1/2,3/5}.

    """

    @pytest.fixture()
    def s(self):
        return segment(Fraction(3, 10), Fraction(7, 10))

    @pytest.fixture()
    def t(self):
        return points(Fraction(2, 5), Fraction(1, 2), Fraction(3, 5))

    def test_s_inter(self, s, t):
        assert format_subset(s_inter(s, t)) == "[3/10,2/5] | {1/2} | {3/5}"

        return

    def test_hesitant_inter(self, s, t):
        assert hesitant_inter(s, t) == segment(Fraction(3, 10), Fraction(3, 5))

        return

    def test_unions(self, s, t):
        assert s_union(s, t) == segment(Fraction(2, 5), Fraction(7, 10))
        assert hesitant_union(s, t) == segment(Fraction(2, 5), Fraction(7, 10))

        return

    def test_operands_are_incomparable(self, s, t):
        assert not s_order(s, t)
        assert not s_order(t, s)

        return

    def test_meet_is_below_operands(self, s, t):
        meet = s_inter(s, t)

        assert s_order(meet, s)
        assert s_order(meet, t)

        return

    def test_s_inter_can_be_empty_off_closed_sets(self):
        """A rational and an irrational piece have no common element.

        """
        a = interval(Fraction(1, 5), Fraction(2, 5), False, True, Tag.QONLY)
        b = interval(Fraction(1, 5), Fraction(2, 5), False, False, Tag.IONLY)

        assert s_inter(a, b) == EMPTY

        return

    pass


class TestClosedSubsets(object):

    def test_open_set_is_refused(self):
        with pytest.raises(NotClosedError):
            ClosedSubset(interval(0, Fraction(1, 2), True, False))

        return

    def test_empty_set_is_refused(self):
        with pytest.raises(NotClosedError):
            ClosedSubset(EMPTY)

        return

    def test_closed_operators_on_intervals(self):
        a = ClosedSubset(segment(Fraction(1, 5), Fraction(1, 2)))
        b = ClosedSubset(segment(Fraction(1, 4), Fraction(3, 4)))

        assert closed_meet(a, b) == a
        assert closed_join(a, b) == b
        assert closed_leq(a, b)

        return

    @given(a=intervals(), b=intervals())
    def test_restriction_to_intervals(self, a, b):
        ca = ClosedSubset.from_interval(a)
        cb = ClosedSubset.from_interval(b)

        assert closed_join(ca, cb) == ClosedSubset.from_interval(interval_join(a, b))
        assert closed_meet(ca, cb) == ClosedSubset.from_interval(interval_meet(a, b))
        assert closed_leq(ca, cb) == interval_leq(a, b)

        return

    @given(a=st.lists(intervals(), min_size=1, max_size=5), b=st.lists(intervals(), min_size=1, max_size=5))
    def test_results_are_closed(self, a, b):
        ca = ClosedSubset(reduce(union, (x.as_subset() for x in a)))
        cb = ClosedSubset(reduce(union, (x.as_subset() for x in b)))

        for result in (closed_join(ca, cb), closed_meet(ca, cb)):
            assert ClosedSubset(result.inner) == result

        return

    def test_many_points(self):
        grid = ClosedSubset(points(*(Fraction(k, 300) for k in range(301))))
        middle = ClosedSubset(segment(Fraction(1, 3), Fraction(2, 3)))

        meet = closed_meet(grid, middle)
        join = closed_join(grid, middle)

        assert meet.inner == points(*(Fraction(k, 300) for k in range(201)))
        assert join.inner == union(points(*(Fraction(k, 300) for k in range(100, 301))), middle.inner)
        assert closed_leq(meet, join)

        return

    pass
