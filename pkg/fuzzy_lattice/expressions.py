"""Text syntax for sets and grade functions.

Set expressions:

    expr     := term ("|" term)*
    term     := factor ("&" factor)*
    factor   := "!" factor | "(" expr ")" | interval | points | "QQ" | "II" | "EMPTY"
    interval := ("[" | "(") rat "," rat ("]" | ")")
    points   := "{" rat ("," rat)* "}"
    rat      := decimal | int "/" int
    signed   := ["-"] decimal | ["-"] int "/" int

Grade expressions:

    grade    := NAME "(" [arg ("," arg)*] ")"

where chi and delta take a set expression, const, singleton, below and above take a rational, max and min take two
grades, id takes nothing and affine takes a set expression, a signed slope and a signed offset (the affine map on
the set, 0 off it). Whitespace is insignificant and every literal is an exact rational.
"""
import re

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from fuzzy_lattice.errors import EmptyAtomError, ExpressionSyntaxError
from fuzzy_lattice.grade_lattices import Interval
from fuzzy_lattice.piecewise import (
    AffineMap,
    PiecewiseFn,
    above,
    below,
    characteristic,
    constant,
    delta,
    identity,
    pw_max,
    pw_min,
    restricted,
    singleton,
)
from fuzzy_lattice.set_algebra import (
    EMPTY,
    IRRATIONALS,
    RATIONALS,
    Atom,
    RealSubset,
    complement,
    format_atom,
    format_rat,
    intersect,
    point,
    union,
    unit_rat,
)

_TOKEN = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>\d+/\d+|\d+(?:\.\d*)?|\.\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[\[\](){},|&!-])
""", re.VERBOSE)


class Token(NamedTuple):
    kind: str
    text: str
    position: int

    pass


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0

    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError("Unexpected character {!r}".format(text[position]), position)

        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()

    tokens.append(Token("end", "", len(text)))

    return tokens


@dataclass(frozen=True)
class IntervalLiteral(object):
    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def evaluate(self) -> RealSubset:
        return RealSubset([Atom(self.lo, self.hi, self.lo_closed, self.hi_closed)])

    pass


@dataclass(frozen=True)
class PointsLiteral(object):
    values: Tuple[Fraction, ...]

    def evaluate(self) -> RealSubset:
        return RealSubset(point(value) for value in self.values)

    pass


@dataclass(frozen=True)
class Keyword(object):
    name: str

    def evaluate(self) -> RealSubset:
        return {"QQ": RATIONALS, "II": IRRATIONALS, "EMPTY": EMPTY}[self.name]

    pass


@dataclass(frozen=True)
class Union(object):
    left: object
    right: object

    def evaluate(self) -> RealSubset:
        return union(self.left.evaluate(), self.right.evaluate())

    pass


@dataclass(frozen=True)
class Intersect(object):
    left: object
    right: object

    def evaluate(self) -> RealSubset:
        return intersect(self.left.evaluate(), self.right.evaluate())

    pass


@dataclass(frozen=True)
class Complement(object):
    operand: object

    def evaluate(self) -> RealSubset:
        return complement(self.operand.evaluate())

    pass


class _Parser(object):
    def __init__(self, text: str):
        self._tokens = tokenize(text)
        self._index = 0

        return

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._current
        self._index += 1
        return token

    def _peek(self, offset: int = 1) -> Token:
        return self._tokens[min(self._index + offset, len(self._tokens) - 1)]

    def _expect(self, text: str) -> Token:
        token = self._current
        if token.text != text:
            raise ExpressionSyntaxError("Expected '{}' but found {}".format(text, self._describe(token)),
                                        token.position)
        return self._advance()

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind == "end" else "'{}'".format(token.text)

    def finish(self) -> None:
        if self._current.kind != "end":
            raise ExpressionSyntaxError("Unexpected {}".format(self._describe(self._current)), self._current.position)
        return

    def _number(self) -> Fraction:
        token = self._current
        if token.kind != "number":
            raise ExpressionSyntaxError("Expected a rational but found {}".format(self._describe(token)),
                                        token.position)
        self._advance()

        try:
            return Fraction(token.text)
        except ZeroDivisionError:
            raise ExpressionSyntaxError("Zero denominator in '{}'".format(token.text), token.position)

    def rat(self) -> Fraction:
        return unit_rat(self._number(), "literal")

    def signed_rat(self) -> Fraction:
        if self._current.text == "-":
            self._advance()
            return -self._number()

        return self._number()

    def expr(self):
        node = self.term()
        while self._current.text == "|":
            self._advance()
            node = Union(node, self.term())

        return node

    def term(self):
        node = self.factor()
        while self._current.text == "&":
            self._advance()
            node = Intersect(node, self.factor())

        return node

    def factor(self):
        token = self._current

        if token.text == "!":
            self._advance()
            return Complement(self.factor())

        if token.text == "(" and self._peek().kind != "number":
            self._advance()
            node = self.expr()
            self._expect(")")
            return node

        if token.text in ("[", "("):
            return self.interval()

        if token.text == "{":
            return self.points()

        if token.kind == "name" and token.text in ("QQ", "II", "EMPTY"):
            self._advance()
            return Keyword(token.text)

        raise ExpressionSyntaxError("Unexpected {}".format(self._describe(token)), token.position)

    def interval(self) -> IntervalLiteral:
        opening = self._advance()
        lo = self.rat()
        self._expect(",")
        hi = self.rat()

        closing = self._current
        if closing.text not in ("]", ")"):
            raise ExpressionSyntaxError("Expected ']' or ')' but found {}".format(self._describe(closing)),
                                        closing.position)
        self._advance()

        literal = IntervalLiteral(lo, hi, opening.text == "[", closing.text == "]")

        # Validate now so that inverted and degenerate open intervals are reported here.
        Atom(literal.lo, literal.hi, literal.lo_closed, literal.hi_closed)

        return literal

    def points(self) -> PointsLiteral:
        opening = self._expect("{")
        if self._current.text == "}":
            raise EmptyAtomError("Empty point set at position {}".format(opening.position))

        values = [self.rat()]
        while self._current.text == ",":
            self._advance()
            values.append(self.rat())
        self._expect("}")

        return PointsLiteral(tuple(values))

    def grade(self) -> PiecewiseFn:
        token = self._current
        if token.kind != "name":
            raise ExpressionSyntaxError("Expected a grade name but found {}".format(self._describe(token)),
                                        token.position)
        self._advance()

        name = token.text
        self._expect("(")

        if name in ("chi", "delta"):
            subset = self.expr().evaluate()
            result = characteristic(subset) if name == "chi" else delta(subset)
        elif name in _RAT_GRADES:
            result = _RAT_GRADES[name](self.rat())
        elif name in ("max", "min"):
            first = self.grade()
            self._expect(",")
            second = self.grade()
            result = pw_max(first, second) if name == "max" else pw_min(first, second)
        elif name == "id":
            result = identity()
        elif name == "affine":
            subset = self.expr().evaluate()
            self._expect(",")
            slope = self.signed_rat()
            self._expect(",")
            offset = self.signed_rat()
            result = restricted(subset, AffineMap(slope, offset))
        else:
            raise ExpressionSyntaxError("Unknown grade '{}'".format(name), token.position)

        self._expect(")")

        return result

    def closed_interval(self) -> Interval:
        start = self._current
        literal = self.interval()
        if not (literal.lo_closed and literal.hi_closed):
            raise ExpressionSyntaxError("Interval grades must be closed", start.position)

        return Interval(literal.lo, literal.hi)

    pass


_RAT_GRADES = {
    "const": constant,
    "singleton": singleton,
    "below": below,
    "above": above,
}


def parse_set_ast(text: str):
    parser = _Parser(text)
    node = parser.expr()
    parser.finish()

    return node


def parse_set_expr(text: str) -> RealSubset:
    """Parse a set expression into its canonical set.

    """
    return parse_set_ast(text).evaluate()


def parse_grade_expr(text: str) -> PiecewiseFn:
    parser = _Parser(text)
    result = parser.grade()
    parser.finish()

    return result


def parse_rat(text: str) -> Fraction:
    parser = _Parser(text)
    result = parser.rat()
    parser.finish()

    return result


def parse_interval(text: str) -> Interval:
    parser = _Parser(text)
    result = parser.closed_interval()
    parser.finish()

    return result


def format_grade(f: PiecewiseFn) -> str:
    """Grade expression that parses back to f: the max of one affine term per nonzero canonical piece.

    """
    terms = []
    for atom, affine in f.pieces():
        if affine.slope == 0 and affine.offset == 0:
            continue
        if affine.slope == 0 and affine.offset == 1:
            terms.append("chi({})".format(format_atom(atom)))
        else:
            terms.append("affine({}, {}, {})".format(
                format_atom(atom), format_rat(affine.slope), format_rat(affine.offset)
            ))

    if not terms:
        return "const(0)"

    text = terms[-1]
    for term in reversed(terms[:-1]):
        text = "max({}, {})".format(term, text)

    return text
