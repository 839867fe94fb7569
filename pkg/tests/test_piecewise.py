import pytest

from fractions import Fraction
from hypothesis import given, strategies as st

import fuzzy_lattice.config as config

from fuzzy_lattice.errors import EmptySetError, InvalidFError, InvalidPartitionError, RangeError
from fuzzy_lattice.grade_lattices import ClosedSubset, MonotonePWA
from fuzzy_lattice.piecewise import (
    AffineMap,
    PiecewiseFn,
    above,
    below,
    characteristic,
    constant,
    delta,
    delta_f,
    format_piecewise,
    from_monotone,
    grade_constructor,
    identity,
    pw_leq,
    pw_max,
    pw_min,
    restricted,
    singleton,
)
from fuzzy_lattice.set_algebra import EMPTY, RATIONALS, Atom, interval, points, segment, union

HALF = Fraction(1, 2)

rationals = st.fractions(min_value=0, max_value=1, max_denominator=8)

simple_grades = st.one_of(
    rationals.map(constant),
    rationals.map(singleton),
    rationals.map(below),
    rationals.map(above),
    st.just(identity()),
)

grades = st.recursive(
    simple_grades,
    lambda children: st.tuples(children, children, st.booleans()).map(
        lambda args: pw_max(args[0], args[1]) if args[2] else pw_min(args[0], args[1])
    ),
    max_leaves=4,
)


class TestConstruction(object):

    def test_constant_and_identity(self):
        assert constant(HALF)(Fraction(1, 3)) == HALF
        assert identity()(Fraction(1, 3)) == Fraction(1, 3)
        assert format_piecewise(constant(HALF)) == "[0,1]: 1/2"

        return

    def test_indicator_grades(self):
        assert singleton(HALF)(HALF) == 1
        assert singleton(HALF)(Fraction(1, 4)) == 0
        assert below(HALF)(HALF) == 1
        assert below(HALF)(Fraction(3, 4)) == 0
        assert above(HALF)(HALF) == 1
        assert above(HALF)(Fraction(1, 4)) == 0

        return

    def test_grade_constructor(self):
        assert grade_constructor(HALF, "const") == constant(HALF)
        assert grade_constructor(HALF, "above") == above(HALF)

        return

    def test_rational_indicator(self):
        f = characteristic(RATIONALS)

        assert f(Fraction(1, 3)) == 1
        assert f.gap_maps(0, 1) == (AffineMap(0, 1), AffineMap(0, 0))
        assert format_piecewise(f) == "([0,1]&QQ): 1 | ((0,1)&II): 0"

        return

    def test_restricted_affine_map(self):
        f = restricted(segment(Fraction(1, 4), Fraction(3, 4)), AffineMap(Fraction(1, 2), Fraction(1, 4)))

        assert f(HALF) == HALF
        assert f(Fraction(1, 8)) == 0

        return

    def test_from_monotone(self):
        assert from_monotone(MonotonePWA.identity()) == identity()

        return

    def test_partition_validation(self):
        with pytest.raises(InvalidPartitionError):
            PiecewiseFn((Fraction(1, 4), 1), (0, 0), ((0, 0),))

        return

    def test_map_range_validation(self):
        with pytest.raises(RangeError):
            PiecewiseFn((0, 1), (0, 0), ((2, 0),))

        return

    def test_from_pieces(self):
        f = PiecewiseFn.from_pieces([
            (Atom(0, HALF, True, False), (0, 0)),
            (Atom(HALF, 1), (0, 1)),
        ])

        assert f == above(HALF)

        return

    def test_from_pieces_rejects_overlaps(self):
        with pytest.raises(InvalidPartitionError):
            PiecewiseFn.from_pieces([(Atom(0, HALF), (0, 0)), (Atom(HALF, 1), (0, 1))])

        return

    def test_canonical_form_drops_redundant_breakpoints(self):
        f = PiecewiseFn((0, HALF, 1), (0, HALF, 1), ((1, 0), (1, 0)))

        assert f == identity()
        assert f.points == (0, 1)

        return

    pass


class TestPointwiseOperators(object):

    def test_max_of_complementary_indicators(self):
        assert pw_max(below(HALF), above(HALF)) == constant(1)

        return

    def test_min_of_complementary_indicators(self):
        assert pw_min(below(HALF), above(HALF)) == singleton(HALF)

        return

    def test_max_splits_at_crossing(self):
        f = pw_max(identity(), constant(HALF))

        assert f(Fraction(1, 4)) == HALF
        assert f(Fraction(3, 4)) == Fraction(3, 4)
        assert HALF in f.points

        return

    def test_order(self):
        assert pw_leq(singleton(HALF), below(HALF))
        assert not pw_leq(constant(Fraction(1, 4)), identity())

        return

    @given(f=grades, g=grades)
    def test_commutativity(self, f, g):
        assert pw_max(f, g) == pw_max(g, f)
        assert pw_min(f, g) == pw_min(g, f)

        return

    @given(f=grades, g=grades)
    def test_absorption(self, f, g):
        assert pw_max(f, pw_min(f, g)) == f
        assert pw_min(f, pw_max(f, g)) == f

        return

    @given(f=grades, g=grades, t=rationals)
    def test_pointwise_values(self, f, g, t):
        assert pw_max(f, g)(t) == max(f(t), g(t))
        assert pw_min(f, g)(t) == min(f(t), g(t))

        return

    pass


class TestDelta(object):

    @pytest.fixture()
    def c(self):
        return union(segment(Fraction(3, 10), Fraction(2, 5)), points(Fraction(3, 5)))

    def test_delta_values(self, c):
        f = delta(c)

        assert f(Fraction(1, 5)) == Fraction(3, 10)
        assert f(Fraction(7, 20)) == Fraction(7, 20)
        assert f(HALF) == 0
        assert f(Fraction(3, 5)) == Fraction(3, 5)
        assert f(Fraction(4, 5)) == 0

        return

    def test_delta_pieces(self, c):
        assert format_piecewise(delta(c)) == "[0,3/10]: 3/10 | (3/10,2/5]: t | (2/5,3/5): 0 | {3/5}: 3/5 | (3/5,1]: 0"

        return

    def test_delta_accepts_closed_subsets(self, c):
        assert delta(ClosedSubset(c)) == delta(c)

        return

    def test_delta_is_not_injective_off_closed_sets(self):
        half_open = interval(Fraction(1, 5), HALF, False, True)

        assert delta(half_open) == delta(segment(Fraction(1, 5), HALF))

        return

    def test_delta_of_empty_set(self):
        with pytest.raises(EmptySetError):
            delta(EMPTY)

        return

    def test_delta_f(self):
        f = MonotonePWA(config.DELTA_F_BREAKPOINTS)
        g = delta_f(segment(HALF, 1), f)

        assert g(Fraction(1, 4)) == Fraction(1, 4)
        assert g(Fraction(3, 4)) == Fraction(5, 8)
        assert delta_f(segment(0, 1), MonotonePWA.identity()) == delta(segment(0, 1))

        return

    def test_delta_f_requires_strict_normalized_map(self):
        with pytest.raises(InvalidFError):
            delta_f(segment(0, 1), MonotonePWA.constant(HALF))
        with pytest.raises(InvalidFError):
            delta_f(segment(0, 1), MonotonePWA(((0, 0), (1, HALF))))

        return

    pass
