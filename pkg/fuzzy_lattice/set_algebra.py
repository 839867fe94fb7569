"""Exact algebra of the representable subsets of [0,1].

A set is a finite union of atoms. An atom is an interval with rational endpoints, open or closed at either end, and
a tag restricting it to all reals, to the rationals or to the irrationals in its span. Every operation runs the same
sweep: the endpoints of the operands split [0,1] into elementary pieces (the endpoints themselves and the open gaps
between them), the coverage of each piece is computed as a two bit mask (bit 1 for the rationals, bit 2 for the
irrationals), and the pieces are reassembled into the canonical atom list. Two sets are equal iff their canonical
atom lists are equal.
"""
import bisect
import enum
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from fuzzy_lattice.errors import EmptyAtomError, EmptySetError, RangeError

logger = logging.getLogger(__name__)

RatLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class Tag(enum.IntEnum):
    """Restriction of an atom. The values double as coverage masks.

    """
    QONLY = 1
    IONLY = 2
    ALL = 3

    pass


NONE = 0


def to_rat(value: RatLike) -> Fraction:
    """Convert an int, a Fraction or a decimal/fraction string to an exact Fraction. Floats are refused.

    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError("Expected an exact rational, got {!r}".format(value))

    return Fraction(value)


def unit_rat(value: RatLike, what: str = "value") -> Fraction:
    """Convert to a Fraction and check that it lies in [0,1].

    """
    result = to_rat(value)

    if result < ZERO or result > ONE:
        raise RangeError("{} {} is outside [0,1]".format(what, format_rat(result)))

    return result


def format_rat(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    return "{}/{}".format(value.numerator, value.denominator)


@dataclass(frozen=True)
class Atom(object):
    """An interval of [0,1] restricted by a tag.

    :param lo:          Lower endpoint.
    :param hi:          Upper endpoint.
    :param lo_closed:   Whether the lower endpoint is included (when the tag admits rationals).
    :param hi_closed:   Whether the upper endpoint is included (when the tag admits rationals).
    :param tag:         All reals, rationals only or irrationals only.
    """
    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True
    tag: Tag = Tag.ALL

    def __post_init__(self):
        lo = unit_rat(self.lo, "endpoint")
        hi = unit_rat(self.hi, "endpoint")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "tag", Tag(self.tag))

        # Sanity check.
        if lo > hi:
            raise EmptyAtomError("Inverted atom {}..{}".format(format_rat(lo), format_rat(hi)))
        if lo == hi:
            if not (self.lo_closed and self.hi_closed):
                raise EmptyAtomError("Degenerate atom at {} must be closed".format(format_rat(lo)))
            if self.tag == Tag.IONLY:
                raise EmptyAtomError("Irrational-only atom at the rational point {}".format(format_rat(lo)))

        return

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, q: Fraction) -> bool:
        """Whether the rational point q belongs to the atom.

        """
        if self.tag == Tag.IONLY:
            return False

        if q < self.lo or q > self.hi:
            return False
        if q == self.lo and not self.lo_closed:
            return False
        if q == self.hi and not self.hi_closed:
            return False

        return True

    def covers_gap(self, lo: Fraction, hi: Fraction) -> bool:
        """Whether the open gap (lo, hi) lies inside the span of the atom.

        """
        return self.lo <= lo and hi <= self.hi and lo < hi

    pass


def point(q: RatLike) -> Atom:
    q = to_rat(q)
    return Atom(q, q, True, True, Tag.ALL)


def span(lo: RatLike, hi: RatLike, lo_closed: bool = True, hi_closed: bool = True, tag: Tag = Tag.ALL) -> Atom:
    return Atom(to_rat(lo), to_rat(hi), lo_closed, hi_closed, tag)


def _joins_run(mask: int, point_mask: int) -> bool:
    # A covered rational point continues a run admitting rationals, an uncovered one continues an irrational run.
    if mask == Tag.IONLY:
        return point_mask == NONE

    return point_mask == Tag.ALL


def _assemble(points: Sequence[Fraction], point_masks: Sequence[int], gap_masks: Sequence[int]) -> Tuple[Atom, ...]:
    """Turn the coverage of the elementary pieces into the canonical atom list.

    """
    gaps = len(points) - 1

    # Maximal runs of gaps sharing a mask, joined through compatible interior points.
    runs = []
    interior = set()
    i = 0
    while i < gaps:
        mask = gap_masks[i]
        if mask == NONE:
            i += 1
            continue

        j = i
        while j + 1 < gaps and gap_masks[j + 1] == mask and _joins_run(mask, point_masks[j + 1]):
            interior.add(j + 1)
            j += 1

        runs.append({"start": i, "end": j + 1, "mask": mask, "lo_closed": False, "hi_closed": False})
        i = j + 1

    starts = {run["start"]: run for run in runs}
    ends = {run["end"]: run for run in runs}

    result = []

    # Covered boundary points join an adjacent All run, then an adjacent rational run, else stand alone.
    for k, mask in enumerate(point_masks):
        if mask != Tag.ALL or k in interior:
            continue

        candidates = []
        left = ends.get(k)
        right = starts.get(k)
        for run, side in ((left, "hi_closed"), (right, "lo_closed")):
            if run is not None and run["mask"] != Tag.IONLY:
                candidates.append((0 if run["mask"] == Tag.ALL else 1, run, side))

        if len(candidates) == 0:
            result.append(Atom(points[k], points[k], True, True, Tag.ALL))
            continue

        # Stable: on a tie the left run wins.
        _, run, side = min(candidates, key=lambda entry: entry[0])
        run[side] = True

    for run in runs:
        lo = points[run["start"]]
        hi = points[run["end"]]
        if run["mask"] == Tag.IONLY:
            result.append(Atom(lo, hi, False, False, Tag.IONLY))
        else:
            result.append(Atom(lo, hi, run["lo_closed"], run["hi_closed"], Tag(run["mask"])))

    return tuple(sorted(result, key=lambda atom: (atom.lo, atom.hi)))


def _breakpoints(atom_lists: Iterable[Iterable[Atom]], extra: Iterable[Fraction] = ()) -> List[Fraction]:
    values = {ZERO, ONE}
    values.update(extra)

    for atoms in atom_lists:
        for atom in atoms:
            values.add(atom.lo)
            values.add(atom.hi)

    return sorted(values)


def _coverage(atoms: Iterable[Atom], points: Sequence[Fraction]) -> Tuple[List[int], List[int]]:
    """Point masks (ALL or NONE) and gap masks of the elementary pieces cut out by the sorted points.

    """
    # Each atom marks one contiguous range of points and one of gaps in the difference arrays.
    size = len(points)
    point_counts = [0] * (size + 1)
    rational_counts = [0] * (size + 1)
    irrational_counts = [0] * (size + 1)

    for atom in atoms:
        first_gap = bisect.bisect_left(points, atom.lo)
        end_gap = bisect.bisect_right(points, atom.hi) - 1
        if first_gap < end_gap:
            if atom.tag & Tag.QONLY:
                rational_counts[first_gap] += 1
                rational_counts[end_gap] -= 1
            if atom.tag & Tag.IONLY:
                irrational_counts[first_gap] += 1
                irrational_counts[end_gap] -= 1

        if atom.tag == Tag.IONLY:
            continue

        first = bisect.bisect_left(points, atom.lo) if atom.lo_closed else bisect.bisect_right(points, atom.lo)
        end = bisect.bisect_right(points, atom.hi) if atom.hi_closed else bisect.bisect_left(points, atom.hi)
        if first < end:
            point_counts[first] += 1
            point_counts[end] -= 1

    point_masks = []
    covering = 0
    for k in range(size):
        covering += point_counts[k]
        point_masks.append(Tag.ALL if covering > 0 else NONE)

    gap_masks = []
    rational = 0
    irrational = 0
    for k in range(size - 1):
        rational += rational_counts[k]
        irrational += irrational_counts[k]
        gap_masks.append((Tag.QONLY if rational > 0 else NONE) | (Tag.IONLY if irrational > 0 else NONE))

    return point_masks, gap_masks


def _sweep(operands: Sequence[Sequence[Atom]], fold: Callable[[List[int]], int]) -> Tuple[Atom, ...]:
    points = _breakpoints(operands)
    coverages = [_coverage(atoms, points) for atoms in operands]

    point_masks = []
    for k in range(len(points)):
        mask = fold([masks[k] for masks, _ in coverages])

        # A rational point is covered exactly when its rational bit is set.
        point_masks.append(Tag.ALL if mask & Tag.QONLY else NONE)

    gap_masks = [fold([masks[k] for _, masks in coverages]) for k in range(len(points) - 1)]

    return _assemble(points, point_masks, gap_masks)


def _fold_or(masks: List[int]) -> int:
    result = NONE
    for mask in masks:
        result |= mask

    return result


def _fold_and(masks: List[int]) -> int:
    result = Tag.ALL
    for mask in masks:
        result &= mask

    return result


class RealSubset(object):
    """Canonical representable subset of [0,1]. Instances are immutable.

    Build instances with the constructor (any list of atoms, overlaps allowed) or with the module helpers. The
    operators ``|``, ``&``, ``~`` and ``-`` are union, intersection, complement in [0,1] and difference, ``<=`` is
    inclusion.
    """
    __slots__ = ("_atoms", "_los")

    def __init__(self, atoms: Iterable[Atom] = ()):
        atoms = list(atoms)

        for atom in atoms:
            if not isinstance(atom, Atom):
                raise TypeError("Expected Atom instances, got {!r}".format(atom))

        self._set(_sweep([atoms], _fold_or))

        return

    @classmethod
    def _wrap(cls, atoms: Tuple[Atom, ...]) -> "RealSubset":
        result = cls.__new__(cls)
        result._set(atoms)

        return result

    def _set(self, atoms: Tuple[Atom, ...]) -> None:
        object.__setattr__(self, "_atoms", atoms)
        object.__setattr__(self, "_los", [atom.lo for atom in atoms])
        return

    def __setattr__(self, key, value):
        raise AttributeError("RealSubset is immutable")

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return self._atoms

    @property
    def is_empty(self) -> bool:
        return len(self._atoms) == 0

    def breakpoints(self) -> List[Fraction]:
        return _breakpoints([self._atoms])

    def __eq__(self, other):
        if not isinstance(other, RealSubset):
            return NotImplemented

        return self._atoms == other._atoms

    def __hash__(self):
        return hash(self._atoms)

    def __or__(self, other: "RealSubset") -> "RealSubset":
        return union(self, other)

    def __and__(self, other: "RealSubset") -> "RealSubset":
        return intersect(self, other)

    def __invert__(self) -> "RealSubset":
        return complement(self)

    def __sub__(self, other: "RealSubset") -> "RealSubset":
        return intersect(self, complement(other))

    def __le__(self, other: "RealSubset") -> bool:
        return subset_of(self, other)

    def __contains__(self, q) -> bool:
        return contains(self, to_rat(q))

    def __str__(self):
        return format_subset(self)

    def __repr__(self):
        return "RealSubset({!r})".format(format_subset(self))

    pass


EMPTY = RealSubset._wrap(())
UNIT = RealSubset._wrap((Atom(ZERO, ONE, True, True, Tag.ALL),))
RATIONALS = RealSubset._wrap((Atom(ZERO, ONE, True, True, Tag.QONLY),))
IRRATIONALS = RealSubset._wrap((Atom(ZERO, ONE, False, False, Tag.IONLY),))


def canonicalize(raw: Iterable[Atom]) -> RealSubset:
    """Canonical set denoting the union of the raw atoms.

    """
    return RealSubset(raw)


def union(a: RealSubset, b: RealSubset) -> RealSubset:
    return RealSubset._wrap(_sweep([a.atoms, b.atoms], _fold_or))


def intersect(a: RealSubset, b: RealSubset) -> RealSubset:
    return RealSubset._wrap(_sweep([a.atoms, b.atoms], _fold_and))


def complement(a: RealSubset) -> RealSubset:
    return RealSubset._wrap(_sweep([a.atoms], lambda masks: masks[0] ^ Tag.ALL))


def subset_of(a: RealSubset, b: RealSubset) -> bool:
    return intersect(a, complement(b)).is_empty


def equals(a: RealSubset, b: RealSubset) -> bool:
    return a == b


def contains(a: RealSubset, q: Fraction) -> bool:
    """Whether the rational point q belongs to the set.

    """
    # Atoms are disjoint and sorted by lower endpoint. At most two share one (a point {q} and an irrational-only
    # atom starting at q), so q lies in one of the last two atoms starting at or before it.
    index = bisect.bisect_right(a._los, q)

    return any(atom.contains(q) for atom in a.atoms[max(0, index - 2):index])


@dataclass(frozen=True)
class Bounds(object):
    inf: Fraction
    sup: Fraction
    inf_attained: bool
    sup_attained: bool

    pass


def bounds(a: RealSubset) -> Bounds:
    """Infimum and supremum of a nonempty set, with attainment flags.

    """
    if a.is_empty:
        raise EmptySetError("The bounds of the empty set are undefined")

    inf = a.atoms[0].lo
    sup = max(atom.hi for atom in a.atoms)

    return Bounds(inf, sup, contains(a, inf), contains(a, sup))


def closure(a: RealSubset) -> RealSubset:
    return RealSubset(Atom(atom.lo, atom.hi, True, True, Tag.ALL) for atom in a.atoms)


def is_closed(a: RealSubset) -> bool:
    # A canonical set is closed exactly when each of its atoms is a closed All interval.
    return all(atom.tag == Tag.ALL and atom.lo_closed and atom.hi_closed for atom in a.atoms)


def decompose(a: RealSubset, points: Sequence[Fraction]) -> Tuple[List[int], List[int]]:
    """Coverage masks of the elementary pieces cut out by the sorted points (which must include 0, 1 and every
    endpoint of the set).

    :return:    Point masks (ALL or NONE) and gap masks, one per consecutive pair of points.
    """
    return _coverage(a.atoms, points)


def segment(lo: RatLike, hi: RatLike) -> RealSubset:
    """The closed interval [lo, hi], empty when lo > hi.

    """
    lo = to_rat(lo)
    hi = to_rat(hi)

    if lo > hi:
        return EMPTY

    return RealSubset._wrap((Atom(lo, hi, True, True, Tag.ALL),))


def interval(lo: RatLike, hi: RatLike, lo_closed: bool = True, hi_closed: bool = True, tag: Tag = Tag.ALL) -> RealSubset:
    return RealSubset([span(lo, hi, lo_closed, hi_closed, tag)])


def points(*values: RatLike) -> RealSubset:
    return RealSubset(point(value) for value in values)


def finite_points(a: RealSubset) -> Optional[FrozenSet[Fraction]]:
    """The elements of a finite set, or None when the set is infinite.

    """
    if any(not atom.is_point for atom in a.atoms):
        return None

    return frozenset(atom.lo for atom in a.atoms)


def _format_bounds(atom: Atom) -> str:
    return "{}{},{}{}".format(
        "[" if atom.lo_closed else "(",
        format_rat(atom.lo),
        format_rat(atom.hi),
        "]" if atom.hi_closed else ")",
    )


def format_atom(atom: Atom) -> str:
    if atom.is_point:
        return "{{{}}}".format(format_rat(atom.lo))

    if atom.tag == Tag.QONLY:
        return "({}&QQ)".format(_format_bounds(atom))
    if atom.tag == Tag.IONLY:
        return "({}&II)".format(_format_bounds(atom))

    return _format_bounds(atom)


def format_subset(a: RealSubset) -> str:
    """Canonical text of a set in the expression syntax.

    """
    if a.is_empty:
        return "EMPTY"

    return " | ".join(format_atom(atom) for atom in a.atoms)
