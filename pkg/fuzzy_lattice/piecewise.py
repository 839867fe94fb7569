"""Grade functions [0,1] -> [0,1] for type-2 fuzzy sets.

A function is stored on a sorted list of rational breakpoints running from 0 to 1. Each breakpoint carries its own
value, and each open gap between consecutive breakpoints carries two affine maps: one applied to the rationals of
the gap and one applied to the irrationals. Interior breakpoints are removed whenever both neighbouring gaps share
their maps and the breakpoint value continues them, which makes the stored form canonical: two functions are equal
on all of [0,1] iff their stored forms are identical.
"""
import bisect
import enum
import logging

from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from fuzzy_lattice.errors import EmptySetError, InvalidFError, InvalidPartitionError, RangeError
from fuzzy_lattice.grade_lattices import ClosedSubset, MonotonePWA
from fuzzy_lattice.set_algebra import (
    ONE,
    ZERO,
    Atom,
    NONE,
    RatLike,
    RealSubset,
    Tag,
    bounds,
    decompose,
    format_atom,
    format_rat,
    points as point_set,
    segment,
    unit_rat,
)

logger = logging.getLogger(__name__)


class AffineMap(NamedTuple):
    slope: Fraction
    offset: Fraction

    def __call__(self, t: Fraction) -> Fraction:
        return self.slope * t + self.offset

    def __str__(self):
        if self.slope == 0:
            return format_rat(self.offset)

        term = "t" if self.slope == 1 else "{}*t".format(format_rat(self.slope))
        if self.offset == 0:
            return term
        if self.offset > 0:
            return "{}+{}".format(term, format_rat(self.offset))

        return "{}-{}".format(term, format_rat(-self.offset))

    pass


def const_map(value: RatLike) -> AffineMap:
    return AffineMap(ZERO, Fraction(value))


ZERO_MAP = const_map(0)
ONE_MAP = const_map(1)
IDENTITY_MAP = AffineMap(ONE, ZERO)


class PiecewiseFn(object):
    """Tagged-piecewise-affine grade function. Instances are immutable and always canonical.

    :param points:          Sorted breakpoints, the first being 0 and the last 1.
    :param values:          Value at each breakpoint.
    :param rational_maps:   Affine map applied to the rationals of each gap.
    :param irrational_maps: Affine map applied to the irrationals of each gap. Defaults to the rational maps.
    """
    __slots__ = ("_points", "_values", "_rational_maps", "_irrational_maps")

    def __init__(
            self,
            points: Sequence[RatLike],
            values: Sequence[RatLike],
            rational_maps: Sequence[Tuple[RatLike, RatLike]],
            irrational_maps: Optional[Sequence[Tuple[RatLike, RatLike]]] = None):
        points = [unit_rat(p, "breakpoint") for p in points]
        values = [unit_rat(v, "value") for v in values]
        rational_maps = [AffineMap(Fraction(s), Fraction(o)) for s, o in rational_maps]
        if irrational_maps is None:
            irrational_maps = rational_maps
        else:
            irrational_maps = [AffineMap(Fraction(s), Fraction(o)) for s, o in irrational_maps]

        # Sanity check.
        if len(points) < 2 or points[0] != ZERO or points[-1] != ONE:
            raise InvalidPartitionError("Breakpoints must run from 0 to 1")
        if any(b <= a for a, b in zip(points, points[1:])):
            raise InvalidPartitionError("Breakpoints must be strictly increasing")
        if len(values) != len(points):
            raise InvalidPartitionError("Expected one value per breakpoint")
        if len(rational_maps) != len(points) - 1 or len(irrational_maps) != len(points) - 1:
            raise InvalidPartitionError("Expected one map per gap")

        for lo, hi, r_map, i_map in zip(points, points[1:], rational_maps, irrational_maps):
            for affine in (r_map, i_map):
                # Affine, so the extremes over the gap are reached at its ends.
                for t in (lo, hi):
                    if affine(t) < ZERO or affine(t) > ONE:
                        raise RangeError("Map {} leaves [0,1] on ({},{})".format(
                            affine, format_rat(lo), format_rat(hi)
                        ))

        self._set(*_canonical(points, values, rational_maps, irrational_maps))

        return

    def _set(self, points, values, rational_maps, irrational_maps) -> None:
        object.__setattr__(self, "_points", tuple(points))
        object.__setattr__(self, "_values", tuple(values))
        object.__setattr__(self, "_rational_maps", tuple(rational_maps))
        object.__setattr__(self, "_irrational_maps", tuple(irrational_maps))
        return

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[Atom, Tuple[RatLike, RatLike]]]) -> "PiecewiseFn":
        """Build a function from pieces (atom, (slope, offset)) that partition [0,1].

        """
        pieces = [(atom, AffineMap(Fraction(s), Fraction(o))) for atom, (s, o) in pieces]

        breakpoints = {ZERO, ONE}
        for atom, _ in pieces:
            breakpoints.update((atom.lo, atom.hi))
        breakpoints = sorted(breakpoints)

        values = []
        for q in breakpoints:
            owners = [affine for atom, affine in pieces if atom.contains(q)]
            if len(owners) != 1:
                raise InvalidPartitionError("Point {} is covered {} times".format(format_rat(q), len(owners)))
            values.append(owners[0](q))

        rational_maps = []
        irrational_maps = []
        for lo, hi in zip(breakpoints, breakpoints[1:]):
            for bit, target in ((Tag.QONLY, rational_maps), (Tag.IONLY, irrational_maps)):
                owners = [affine for atom, affine in pieces if atom.covers_gap(lo, hi) and atom.tag & bit]
                if len(owners) != 1:
                    raise InvalidPartitionError("Gap ({},{}) is covered {} times".format(
                        format_rat(lo), format_rat(hi), len(owners)
                    ))
                target.append(owners[0])

        return cls(breakpoints, values, rational_maps, irrational_maps)

    def __setattr__(self, key, value):
        raise AttributeError("PiecewiseFn is immutable")

    @property
    def points(self) -> Tuple[Fraction, ...]:
        return self._points

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return self._values

    @property
    def rational_maps(self) -> Tuple[AffineMap, ...]:
        return self._rational_maps

    @property
    def irrational_maps(self) -> Tuple[AffineMap, ...]:
        return self._irrational_maps

    def gap_maps(self, lo: Fraction, hi: Fraction) -> Tuple[AffineMap, AffineMap]:
        """Maps in force on the open gap (lo, hi), which must not contain a breakpoint.

        """
        index = bisect.bisect_right(self._points, (lo + hi) / 2) - 1

        return self._rational_maps[index], self._irrational_maps[index]

    def pieces(self) -> List[Tuple[Atom, AffineMap]]:
        """Canonical piece list: gaps with equal maps become All atoms, breakpoints are absorbed into a neighbouring
        piece admitting rationals whose map reaches the breakpoint value.

        """
        gap_pieces = []
        for lo, hi, r_map, i_map in zip(self._points, self._points[1:], self._rational_maps, self._irrational_maps):
            if r_map == i_map:
                entry = [{"lo": lo, "hi": hi, "tag": Tag.ALL, "map": r_map, "lo_closed": False, "hi_closed": False}]
            else:
                entry = [
                    {"lo": lo, "hi": hi, "tag": Tag.QONLY, "map": r_map, "lo_closed": False, "hi_closed": False},
                    {"lo": lo, "hi": hi, "tag": Tag.IONLY, "map": i_map, "lo_closed": False, "hi_closed": False},
                ]
            gap_pieces.append(entry)

        standalone = []
        for k, (q, value) in enumerate(zip(self._points, self._values)):
            candidates = []
            if k > 0:
                candidates += [(piece, "hi_closed") for piece in gap_pieces[k - 1]]
            if k < len(gap_pieces):
                candidates += [(piece, "lo_closed") for piece in gap_pieces[k]]

            for piece, side in candidates:
                if piece["tag"] != Tag.IONLY and piece["map"](q) == value:
                    piece[side] = True
                    break
            else:
                standalone.append((Atom(q, q, True, True, Tag.ALL), const_map(value)))

        result = list(standalone)
        for entry in gap_pieces:
            for piece in entry:
                closed = piece["tag"] != Tag.IONLY
                atom = Atom(
                    piece["lo"],
                    piece["hi"],
                    closed and piece["lo_closed"],
                    closed and piece["hi_closed"],
                    piece["tag"],
                )
                result.append((atom, piece["map"]))

        return sorted(result, key=lambda entry: (entry[0].lo, entry[0].hi, entry[0].tag))

    def __call__(self, t: RatLike) -> Fraction:
        return pw_eval(self, t)

    def __eq__(self, other):
        if not isinstance(other, PiecewiseFn):
            return NotImplemented

        return (self._points, self._values, self._rational_maps, self._irrational_maps) == \
               (other._points, other._values, other._rational_maps, other._irrational_maps)

    def __hash__(self):
        return hash((self._points, self._values, self._rational_maps, self._irrational_maps))

    def __str__(self):
        return format_piecewise(self)

    def __repr__(self):
        return "PiecewiseFn({!r})".format(format_piecewise(self))

    pass


def _canonical(points, values, rational_maps, irrational_maps):
    new_points = [points[0]]
    new_values = [values[0]]
    new_rational = []
    new_irrational = []

    current_rational = rational_maps[0]
    current_irrational = irrational_maps[0]
    last = len(points) - 1

    for k in range(1, last + 1):
        if k < last \
                and rational_maps[k] == current_rational \
                and irrational_maps[k] == current_irrational \
                and current_rational(points[k]) == values[k]:
            continue

        new_points.append(points[k])
        new_values.append(values[k])
        new_rational.append(current_rational)
        new_irrational.append(current_irrational)

        if k < last:
            current_rational = rational_maps[k]
            current_irrational = irrational_maps[k]

    return new_points, new_values, new_rational, new_irrational


def pw_eval(f: PiecewiseFn, t: RatLike) -> Fraction:
    """Value of f at the rational t.

    """
    t = unit_rat(t)
    index = bisect.bisect_left(f.points, t)

    if index < len(f.points) and f.points[index] == t:
        return f.values[index]

    return f.rational_maps[index - 1](t)


def _crossing(a: AffineMap, b: AffineMap, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    if a.slope == b.slope:
        return None

    t = (b.offset - a.offset) / (a.slope - b.slope)
    if lo < t < hi:
        return t

    return None


def _combine(f: PiecewiseFn, g: PiecewiseFn, pick) -> PiecewiseFn:
    refinement = sorted(set(f.points) | set(g.points))

    # Split every gap where two competing maps cross.
    crossings = set()
    for lo, hi in zip(refinement, refinement[1:]):
        f_maps = f.gap_maps(lo, hi)
        g_maps = g.gap_maps(lo, hi)
        for a, b in zip(f_maps, g_maps):
            t = _crossing(a, b, lo, hi)
            if t is not None:
                crossings.add(t)

    refinement = sorted(set(refinement) | crossings)

    values = [pick(pw_eval(f, q), pw_eval(g, q)) for q in refinement]
    rational_maps = []
    irrational_maps = []
    for lo, hi in zip(refinement, refinement[1:]):
        mid = (lo + hi) / 2
        f_maps = f.gap_maps(lo, hi)
        g_maps = g.gap_maps(lo, hi)
        chosen = []
        for a, b in zip(f_maps, g_maps):
            # No crossing inside the gap, so the midpoint decides for the whole gap.
            chosen.append(a if pick(a(mid), b(mid)) == a(mid) else b)
        rational_maps.append(chosen[0])
        irrational_maps.append(chosen[1])

    return PiecewiseFn(refinement, values, rational_maps, irrational_maps)


def pw_max(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    return _combine(f, g, max)


def pw_min(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    return _combine(f, g, min)


def pw_equal(f: PiecewiseFn, g: PiecewiseFn) -> bool:
    return f == g


def pw_leq(f: PiecewiseFn, g: PiecewiseFn) -> bool:
    """Pointwise order, f <= g everywhere on [0,1].

    """
    return pw_max(f, g) == g


def restricted(a: RealSubset, inside: AffineMap, outside: AffineMap = ZERO_MAP) -> PiecewiseFn:
    """The map inside on the set and outside off it.

    """
    breakpoints = a.breakpoints()
    point_masks, gap_masks = decompose(a, breakpoints)

    values = [(inside if mask != NONE else outside)(q) for q, mask in zip(breakpoints, point_masks)]
    rational_maps = [inside if mask & Tag.QONLY else outside for mask in gap_masks]
    irrational_maps = [inside if mask & Tag.IONLY else outside for mask in gap_masks]

    return PiecewiseFn(breakpoints, values, rational_maps, irrational_maps)


def characteristic(a: RealSubset) -> PiecewiseFn:
    """Indicator of the set: 1 on it, 0 off it.

    """
    return restricted(a, ONE_MAP)


def _as_subset(c: Union[ClosedSubset, RealSubset]) -> RealSubset:
    return c.inner if isinstance(c, ClosedSubset) else c


def _delta(a: RealSubset, f: MonotonePWA) -> PiecewiseFn:
    if a.is_empty:
        raise EmptySetError("delta requires a nonempty set")

    inf = bounds(a).inf
    plateau = const_map(f(inf))

    breakpoints = sorted(set(a.breakpoints()) | {t for t, _ in f.breakpoints} | {inf})
    point_masks, gap_masks = decompose(a, breakpoints)

    values = []
    for q, mask in zip(breakpoints, point_masks):
        if q <= inf:
            values.append(plateau(q))
        elif mask != NONE:
            values.append(f(q))
        else:
            values.append(ZERO)

    rational_maps = []
    irrational_maps = []
    for lo, hi, mask in zip(breakpoints, breakpoints[1:], gap_masks):
        if hi <= inf:
            rational_maps.append(plateau)
            irrational_maps.append(plateau)
            continue

        inside = AffineMap(*f.segment_at((lo + hi) / 2))
        rational_maps.append(inside if mask & Tag.QONLY else ZERO_MAP)
        irrational_maps.append(inside if mask & Tag.IONLY else ZERO_MAP)

    return PiecewiseFn(breakpoints, values, rational_maps, irrational_maps)


def delta(c: Union[ClosedSubset, RealSubset]) -> PiecewiseFn:
    """The grade function with value inf C up to inf C, t on C above inf C and 0 elsewhere.

    Injective on closed sets. Any nonempty set is accepted, but off the closed sets different inputs can share an
    image, e.g. (1/5,1/2] and [1/5,1/2].
    """
    return _delta(_as_subset(c), MonotonePWA.identity())


def delta_f(c: Union[ClosedSubset, RealSubset], f: MonotonePWA) -> PiecewiseFn:
    """Variant of delta that reports f(inf C) up to inf C and f(t) on C above it.

    :param f:   Strictly increasing with f(0) = 0 and f(1) = 1.
    """
    if not f.strict:
        raise InvalidFError("f must be strictly increasing")
    if f(ZERO) != ZERO or f(ONE) != ONE:
        raise InvalidFError("f must satisfy f(0) = 0 and f(1) = 1")

    return _delta(_as_subset(c), f)


def constant(a: RatLike) -> PiecewiseFn:
    a = unit_rat(a, "grade")
    return PiecewiseFn((ZERO, ONE), (a, a), (const_map(a),))


def identity() -> PiecewiseFn:
    return PiecewiseFn((ZERO, ONE), (ZERO, ONE), (IDENTITY_MAP,))


def singleton(a: RatLike) -> PiecewiseFn:
    return characteristic(point_set(unit_rat(a, "grade")))


def below(a: RatLike) -> PiecewiseFn:
    return characteristic(segment(ZERO, unit_rat(a, "grade")))


def above(a: RatLike) -> PiecewiseFn:
    return characteristic(segment(unit_rat(a, "grade"), ONE))


def from_monotone(f: MonotonePWA) -> PiecewiseFn:
    points = [t for t, _ in f.breakpoints]
    values = [v for _, v in f.breakpoints]
    maps = [AffineMap(slope, offset) for _, _, slope, offset in f.segments()]

    return PiecewiseFn(points, values, maps)


class GradeKind(enum.Enum):
    CONST = "const"
    SINGLETON = "singleton"
    BELOW = "below"
    ABOVE = "above"

    pass


_CONSTRUCTORS = {
    GradeKind.CONST: constant,
    GradeKind.SINGLETON: singleton,
    GradeKind.BELOW: below,
    GradeKind.ABOVE: above,
}


def grade_constructor(a: RatLike, kind: Union[GradeKind, str]) -> PiecewiseFn:
    """Grade functions attached to a single grade a: the constant a, the indicator of {a}, of [0,a] or of [a,1].

    """
    return _CONSTRUCTORS[GradeKind(kind)](a)


def format_piecewise(f: PiecewiseFn) -> str:
    """Readable listing of the canonical pieces, e.g. ``[0,3/10]: 3/10 | (3/10,2/5]: t | (2/5,1]: 0``.

    """
    return " | ".join("{}: {}".format(format_atom(atom), affine) for atom, affine in f.pieces())
