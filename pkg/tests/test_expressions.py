import pytest

from fractions import Fraction
from hypothesis import given, strategies as st

from fuzzy_lattice.errors import EmptyAtomError, ExpressionSyntaxError, RangeError
from fuzzy_lattice.expressions import (
    format_grade,
    parse_grade_expr,
    parse_interval,
    parse_rat,
    parse_set_expr,
    tokenize,
)
from fuzzy_lattice.grade_lattices import Interval, xi
from fuzzy_lattice.piecewise import above, below, characteristic, constant, delta, identity, pw_max, singleton
from fuzzy_lattice.set_algebra import (
    EMPTY,
    IRRATIONALS,
    RATIONALS,
    Atom,
    RealSubset,
    Tag,
    format_subset,
    points,
    segment,
    union,
)

rationals = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def atoms(draw):
    lo, hi = sorted((draw(rationals), draw(rationals)))
    if lo == hi:
        return Atom(lo, hi)

    return Atom(lo, hi, draw(st.booleans()), draw(st.booleans()), draw(st.sampled_from(list(Tag))))


class TestSetExpressions(object):

    def test_interval(self):
        assert parse_set_expr("[3/10,7/10]") == segment(Fraction(3, 10), Fraction(7, 10))

        return

    def test_decimals_are_exact(self):
        assert parse_set_expr("[0.3, 0.7]") == segment(Fraction(3, 10), Fraction(7, 10))
        assert parse_rat("0.1") == Fraction(1, 10)
        assert parse_rat(".25") == Fraction(1, 4)

        return

    def test_tagged_parts(self):
        result = parse_set_expr("([0,1/5]&QQ)|([0,1/2]&II)")

        assert result == xi(Interval(Fraction(1, 5), Fraction(1, 2)))

        return

    def test_keywords_and_complement(self):
        assert parse_set_expr("!QQ") == IRRATIONALS
        assert parse_set_expr("QQ | II") == segment(0, 1)
        assert parse_set_expr("EMPTY") == EMPTY

        return

    def test_intersection_binds_tighter(self):
        assert parse_set_expr("[0,1/2] | [1/4,3/4] & {1}") == segment(0, Fraction(1, 2))
        assert parse_set_expr("([0,1/2] | [1/4,3/4]) & {1/2}") == points(Fraction(1, 2))

        return

    def test_inverted_interval(self):
        with pytest.raises(EmptyAtomError):
            parse_set_expr("[0.4,0.2]")

        return

    def test_empty_point_set(self):
        with pytest.raises(EmptyAtomError):
            parse_set_expr("{}")

        return

    def test_out_of_range_literal(self):
        with pytest.raises(RangeError):
            parse_set_expr("[0,2]")

        return

    def test_syntax_error_position(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse_set_expr("[0,1/2")

        assert info.value.position == 6

        with pytest.raises(ExpressionSyntaxError) as info:
            parse_set_expr("[0,1] $")

        assert info.value.position == 6

        return

    def test_zero_denominator(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_rat("1/0")

        return

    def test_tokens(self):
        kinds = [token.kind for token in tokenize("[1/2, 0.5) | QQ")]

        assert kinds == ["punct", "number", "punct", "number", "punct", "punct", "name", "end"]

        return

    def test_closed_interval_grades(self):
        assert parse_interval("[1/5, 1/2]") == Interval(Fraction(1, 5), Fraction(1, 2))

        with pytest.raises(ExpressionSyntaxError):
            parse_interval("(0,1]")

        return

    @given(atom_list=st.lists(atoms(), max_size=4))
    def test_printed_sets_parse_back(self, atom_list):
        a = RealSubset(atom_list)

        assert parse_set_expr(format_subset(a)) == a

        return

    pass


class TestGradeExpressions(object):

    def test_constructors(self):
        assert parse_grade_expr("const(1/2)") == constant(Fraction(1, 2))
        assert parse_grade_expr("singleton(0.5)") == singleton(Fraction(1, 2))
        assert parse_grade_expr("id()") == identity()
        assert parse_grade_expr("chi(QQ)") == characteristic(RATIONALS)

        return

    def test_combinations(self):
        assert parse_grade_expr("max(below(1/2), above(1/2))") == constant(1)
        assert parse_grade_expr("min(below(1/2), above(1/2))") == singleton(Fraction(1, 2))

        return

    def test_delta(self):
        c = union(segment(Fraction(3, 10), Fraction(2, 5)), points(Fraction(3, 5)))

        assert parse_grade_expr("delta([3/10,2/5] | {3/5})") == delta(c)

        return

    def test_affine(self):
        f = parse_grade_expr("affine([0,1], -1, 1)")

        assert f(Fraction(1, 4)) == Fraction(3, 4)

        g = parse_grade_expr("affine([1/4,3/4], 1/2, 1/4)")

        assert g(Fraction(1, 2)) == Fraction(1, 2)
        assert g(Fraction(1, 8)) == 0

        return

    def test_unknown_grade(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_grade_expr("foo(1)")

        return

    def test_formatting(self):
        assert format_grade(constant(0)) == "const(0)"
        assert format_grade(identity()) == "affine([0,1], 1, 0)"
        assert format_grade(constant(1)) == "chi([0,1])"

        return

    def test_formatted_grades_parse_back(self):
        c = union(segment(Fraction(3, 10), Fraction(2, 5)), points(Fraction(3, 5)))

        for f in (delta(c), characteristic(RATIONALS), pw_max(identity(), constant(Fraction(1, 2))), below(0)):
            assert parse_grade_expr(format_grade(f)) == f

        return

    @given(a=rationals, b=rationals)
    def test_formatted_indicators_parse_back(self, a, b):
        f = pw_max(below(min(a, b)), above(max(a, b)))

        assert parse_grade_expr(format_grade(f)) == f

        return

    pass
