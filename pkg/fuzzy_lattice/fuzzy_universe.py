"""Fuzzy sets over a finite universe, their pointwise lattices, lifted grade maps and level cuts.

Every family stores one grade per label. Orders and lattice operations are computed label by label with the
grade-level operator of the family, and a grade map g: G -> H lifts to fuzzy sets as A -> g∘A.
"""
import bisect
import enum
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

import fuzzy_lattice.config as config

from fuzzy_lattice.errors import (
    EmptyGradeError,
    FamilyMismatchError,
    InvalidNestingError,
    InvalidUniverseError,
    UniverseMismatchError,
    UnknownNameError,
)
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
    graph_embedding,
    hesitant_inter,
    hesitant_union,
    interval_join,
    interval_leq,
    interval_meet,
    s_order,
    xi,
)
from fuzzy_lattice.piecewise import (
    PiecewiseFn,
    above,
    below,
    characteristic,
    constant,
    delta,
    delta_f,
    pw_eval,
    pw_leq,
    pw_max,
    pw_min,
    singleton,
)
from fuzzy_lattice.set_algebra import (
    ONE,
    ZERO,
    RatLike,
    RealSubset,
    contains,
    format_rat,
    intersect,
    points,
    segment,
    subset_of,
    union,
    unit_rat,
)

logger = logging.getLogger(__name__)


class Family(enum.Enum):
    """Fuzzy set families, named by their document keyword.

    """
    FS = "fs"
    IVFS = "ivfs"
    SVFS = "svfs"
    SVFS_EMPTY = "svfs0"
    HFS = "hfs"
    CVFS = "cvfs"
    T2FS = "t2fs"

    pass


class LatticeOp(enum.Enum):
    JOIN = "join"
    MEET = "meet"

    pass


# Families sharing the carrier of nonempty (or possibly empty) subsets of [0,1].
SET_CARRIERS = frozenset((Family.SVFS, Family.SVFS_EMPTY, Family.HFS))


def compatible(a: Family, b: Family) -> bool:
    return a == b or (a in SET_CARRIERS and b in SET_CARRIERS)


@dataclass(frozen=True)
class Universe(object):
    """Finite, ordered universe of labels.

    """
    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)

        # Sanity check.
        if len(labels) == 0:
            raise InvalidUniverseError("A universe needs at least one label")
        if len(set(labels)) != len(labels):
            raise InvalidUniverseError("Repeated labels in universe")
        for label in labels:
            if not isinstance(label, str) or label == "":
                raise InvalidUniverseError("Labels must be nonempty strings, got {!r}".format(label))

        return

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    pass


def _check_fs(grade):
    if isinstance(grade, (Interval, RealSubset, ClosedSubset, PiecewiseFn)):
        raise FamilyMismatchError("FS grades are rationals, got {!r}".format(grade))

    return unit_rat(grade, "grade")


def _check_type(kind):
    def check(grade):
        if not isinstance(grade, kind):
            raise FamilyMismatchError("Expected a {} grade, got {!r}".format(kind.__name__, grade))
        return grade

    return check


def _check_closed(grade):
    if isinstance(grade, RealSubset):
        return ClosedSubset(grade)

    return _check_type(ClosedSubset)(grade)


_GRADE_CHECKS = {
    Family.FS: _check_fs,
    Family.IVFS: _check_type(Interval),
    Family.SVFS: _check_type(RealSubset),
    Family.SVFS_EMPTY: _check_type(RealSubset),
    Family.HFS: _check_type(RealSubset),
    Family.CVFS: _check_closed,
    Family.T2FS: _check_type(PiecewiseFn),
}


class FuzzySet(object):
    """Fuzzy set of one family: a total map from the universe labels to grades.

    :param family:      Family of the grades.
    :param universe:    Universe the set is defined on.
    :param grades:      One grade per label.
    """
    __slots__ = ("_family", "_universe", "_grades")

    def __init__(self, family: Family, universe: Universe, grades: Mapping[str, Any]):
        family = Family(family)

        # Sanity check.
        missing = [label for label in universe.labels if label not in grades]
        extra = [label for label in grades if label not in universe.labels]
        if missing or extra:
            raise UniverseMismatchError("Grades do not match the universe (missing: {}, unknown: {})".format(
                ", ".join(missing) or "-", ", ".join(extra) or "-"
            ))

        check = _GRADE_CHECKS[family]
        checked = {}
        for label in universe.labels:
            grade = check(grades[label])
            if family in (Family.SVFS, Family.HFS) and grade.is_empty:
                raise EmptyGradeError("Empty grade for '{}' in a {} set".format(label, family.value), label)
            checked[label] = grade

        object.__setattr__(self, "_family", family)
        object.__setattr__(self, "_universe", universe)
        object.__setattr__(self, "_grades", checked)

        return

    @classmethod
    def constant(cls, family: Family, universe: Universe, grade: Any) -> "FuzzySet":
        return cls(family, universe, {label: grade for label in universe.labels})

    def __setattr__(self, key, value):
        raise AttributeError("FuzzySet is immutable")

    @property
    def family(self) -> Family:
        return self._family

    @property
    def universe(self) -> Universe:
        return self._universe

    def grade(self, label: str) -> Any:
        try:
            return self._grades[label]
        except KeyError:
            raise UnknownNameError("Unknown label '{}'".format(label))

    def items(self) -> Iterable[Tuple[str, Any]]:
        return ((label, self._grades[label]) for label in self._universe.labels)

    def with_family(self, family: Family) -> "FuzzySet":
        """The same grades read in another family, e.g. an empty-allowed set-valued set.

        """
        return FuzzySet(family, self._universe, self._grades)

    def same_grades(self, other: "FuzzySet") -> bool:
        """Equality of the grade maps, ignoring the family among compatible families.

        """
        return compatible(self._family, other._family) \
            and self._universe == other._universe \
            and all(self._grades[label] == other._grades[label] for label in self._universe.labels)

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented

        return self._family == other._family and self.same_grades(other)

    def __hash__(self):
        return hash((self._family, self._universe, tuple(self._grades[label] for label in self._universe.labels)))

    def __repr__(self):
        return "FuzzySet({}, {})".format(self._family.value, {label: str(grade) for label, grade in self.items()})

    pass


@dataclass(frozen=True)
class GradeOps(object):
    join: Callable
    meet: Callable
    leq: Callable

    pass


def _fs_leq(a: Fraction, b: Fraction) -> bool:
    return a <= b


_SET_OPS = GradeOps(union, intersect, subset_of)

GRADE_OPS = {
    Family.FS: GradeOps(max, min, _fs_leq),
    Family.IVFS: GradeOps(interval_join, interval_meet, interval_leq),
    Family.SVFS: _SET_OPS,
    Family.SVFS_EMPTY: _SET_OPS,
    Family.HFS: GradeOps(hesitant_union, hesitant_inter, s_order),
    Family.CVFS: GradeOps(closed_join, closed_meet, closed_leq),
    Family.T2FS: GradeOps(pw_max, pw_min, pw_leq),
}


def _check_operands(family: Family, a: FuzzySet, b: FuzzySet) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError("Operands are defined on different universes")
    for operand in (a, b):
        if not compatible(operand.family, family):
            raise FamilyMismatchError("A {} set cannot take part in a {} operation".format(
                operand.family.value, family.value
            ))

    return


def pointwise_combine(family: Family, op: LatticeOp, a: FuzzySet, b: FuzzySet) -> FuzzySet:
    """Apply the join or meet of the family label by label.

    The strict set-valued family refuses an empty result grade with EmptyGradeError; use the empty-allowed family
    to get the lattice.
    """
    family = Family(family)
    op = LatticeOp(op)
    _check_operands(family, a, b)

    ops = GRADE_OPS[family]
    fn = ops.join if op == LatticeOp.JOIN else ops.meet

    grades = {}
    for label in a.universe.labels:
        grade = fn(a.grade(label), b.grade(label))
        if family == Family.SVFS and grade.is_empty:
            raise EmptyGradeError("The meet is empty at '{}'".format(label), label)
        grades[label] = grade

    return FuzzySet(family, a.universe, grades)


def pointwise_order(family: Family, a: FuzzySet, b: FuzzySet) -> bool:
    family = Family(family)
    _check_operands(family, a, b)

    leq = GRADE_OPS[family].leq

    return all(leq(a.grade(label), b.grade(label)) for label in a.universe.labels)


class GradeMap(object):
    """A named map between grade carriers, lifted pointwise to fuzzy sets.

    """
    def __init__(self, name: str, source: Family, target: Family, fn: Callable[[Any], Any]):
        self.name = name
        self.source = Family(source)
        self.target = Family(target)
        self.fn = fn

        return

    def __call__(self, grade: Any) -> Any:
        return self.fn(grade)

    def then(self, other: "GradeMap", name: Optional[str] = None) -> "GradeMap":
        """Composite: first this map, then the other one.

        """
        if not compatible(self.target, other.source):
            raise FamilyMismatchError("Cannot follow '{}' ({}) by '{}' ({})".format(
                self.name, self.target.value, other.name, other.source.value
            ))

        first = self.fn
        second = other.fn

        return GradeMap(
            name or "{}∘{}".format(other.name, self.name),
            self.source,
            other.target,
            lambda grade: second(first(grade)),
        )

    def __repr__(self):
        return "GradeMap({}: {} -> {})".format(self.name, self.source.value, self.target.value)

    pass


def lift_grade_map(a: FuzzySet, gm: GradeMap) -> FuzzySet:
    if not compatible(a.family, gm.source):
        raise FamilyMismatchError("'{}' expects {} sets, got {}".format(gm.name, gm.source.value, a.family.value))

    return FuzzySet(gm.target, a.universe, {label: gm(grade) for label, grade in a.items()})


def pair_map(embedding: IntervalEmbedding, name: Optional[str] = None) -> GradeMap:
    return GradeMap(name or embedding.name, Family.FS, Family.IVFS, embedding)


def delta_f_map(f: MonotonePWA, name: str = "delta_f") -> GradeMap:
    return GradeMap(name, Family.CVFS, Family.T2FS, lambda grade: delta_f(grade, f))


def default_f() -> MonotonePWA:
    return MonotonePWA(config.DELTA_F_BREAKPOINTS)


def _theta(t: Fraction) -> RealSubset:
    return segment(ZERO, t)


GRADE_MAPS: Dict[str, GradeMap] = {
    gm.name: gm for gm in (
        pair_map(PHI, "phi"),
        pair_map(OMEGA, "omega"),
        pair_map(GAMMA, "lambda"),
        pair_map(graph_embedding(MonotonePWA(config.GRAPH_F_BREAKPOINTS)), "graph"),
        pair_map(
            IntervalEmbedding(MonotonePWA(config.PAIR_H1_BREAKPOINTS), MonotonePWA(config.PAIR_H2_BREAKPOINTS)),
            "pair",
        ),
        GradeMap("theta", Family.FS, Family.SVFS, _theta),
        GradeMap("iota", Family.FS, Family.SVFS, lambda t: points(t)),
        GradeMap("i", Family.IVFS, Family.SVFS, lambda interval: interval.as_subset()),
        GradeMap("i_c", Family.IVFS, Family.CVFS, ClosedSubset.from_interval),
        GradeMap("xi", Family.IVFS, Family.SVFS, xi),
        GradeMap("gamma_t2", Family.FS, Family.T2FS, constant),
        GradeMap("phi_bar", Family.FS, Family.T2FS, singleton),
        GradeMap("lambda_bar", Family.FS, Family.T2FS, below),
        GradeMap("omega_bar", Family.FS, Family.T2FS, above),
        GradeMap("mu_bar", Family.SVFS, Family.T2FS, characteristic),
        GradeMap("delta", Family.CVFS, Family.T2FS, delta),
        delta_f_map(default_f()),
    )
}


def grade_map(name: str) -> GradeMap:
    try:
        return GRADE_MAPS[name]
    except KeyError:
        raise UnknownNameError("Unknown grade map '{}' (known: {})".format(name, ", ".join(sorted(GRADE_MAPS))))


def membership(a: FuzzySet, label: str, t: RatLike) -> Fraction:
    """Curried view of a fuzzy set as a map on (label, t).

    FS sets answer whether t lies below the grade, set-valued and interval-valued sets whether t lies in the grade,
    type-2 sets give the grade function value at t.
    """
    t = unit_rat(t)
    grade = a.grade(label)

    if a.family == Family.FS:
        member = t <= grade
    elif a.family == Family.IVFS:
        member = grade.lo <= t <= grade.hi
    elif a.family == Family.CVFS:
        member = contains(grade.inner, t)
    elif a.family == Family.T2FS:
        return pw_eval(grade, t)
    else:
        member = contains(grade, t)

    return ONE if member else ZERO


def _require_fs(a: FuzzySet) -> None:
    if a.family != Family.FS:
        raise FamilyMismatchError("Level cuts are defined on FS sets, got {}".format(a.family.value))

    return


def cut(a: FuzzySet, t: RatLike) -> FrozenSet[str]:
    """Level cut {x | A(x) >= t}.

    """
    _require_fs(a)
    t = unit_rat(t, "threshold")

    return frozenset(label for label, grade in a.items() if grade >= t)


@dataclass(frozen=True)
class CutFamily(object):
    """Finite step representation of the antitone map t -> A_t.

    For t in (thresholds[i-1], thresholds[i]] the cut is sets[i]; at t = 0 it is the whole universe and above the
    last threshold it is empty.
    """
    universe: Universe
    thresholds: Tuple[Fraction, ...]
    sets: Tuple[FrozenSet[str], ...]

    def __post_init__(self):
        thresholds = tuple(unit_rat(t, "threshold") for t in self.thresholds)
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "thresholds", thresholds)
        object.__setattr__(self, "sets", sets)

        # Sanity check.
        if len(thresholds) != len(sets):
            raise InvalidNestingError("Expected one cut per threshold")
        if any(t <= ZERO for t in thresholds):
            raise InvalidNestingError("Thresholds must be positive")
        if any(b <= a for a, b in zip(thresholds, thresholds[1:])):
            raise InvalidNestingError("Thresholds must be strictly increasing")
        labels = frozenset(self.universe.labels)
        for t, s in zip(thresholds, sets):
            if not s <= labels:
                raise InvalidNestingError("Cut at {} names unknown labels".format(format_rat(t)))
        for t, (upper, lower) in zip(thresholds[1:], zip(sets, sets[1:])):
            if not lower <= upper:
                raise InvalidNestingError("Cut at {} is not contained in the previous cut".format(format_rat(t)))

        return

    @property
    def base(self) -> FrozenSet[str]:
        return frozenset(self.universe.labels)

    def at(self, t: RatLike) -> FrozenSet[str]:
        t = unit_rat(t, "threshold")
        if t == ZERO:
            return self.base

        index = bisect.bisect_left(self.thresholds, t)
        if index == len(self.thresholds):
            return frozenset()

        return self.sets[index]

    def normalized(self) -> "CutFamily":
        """Drop thresholds at which the map does not step down.

        """
        keep = []
        for index, s in enumerate(self.sets):
            if len(s) == 0:
                continue
            if index + 1 < len(self.sets) and self.sets[index + 1] == s:
                continue
            keep.append(index)

        return CutFamily(self.universe, tuple(self.thresholds[i] for i in keep), tuple(self.sets[i] for i in keep))

    pass


def cut_family(a: FuzzySet) -> CutFamily:
    _require_fs(a)
    thresholds = sorted({grade for _, grade in a.items() if grade > ZERO})

    return CutFamily(a.universe, tuple(thresholds), tuple(cut(a, t) for t in thresholds))


def cut_reconstruct(cf: CutFamily) -> FuzzySet:
    """Rebuild the FS set with A(x) = max{t | x in A_t}, or 0 when x lies in no cut.

    """
    grades = {label: ZERO for label in cf.universe.labels}
    for t, s in zip(cf.thresholds, cf.sets):
        for label in s:
            grades[label] = t

    return FuzzySet(Family.FS, cf.universe, grades)


def _cut_combine(a: CutFamily, b: CutFamily, combine: Callable[[FrozenSet[str], FrozenSet[str]], FrozenSet[str]]):
    if a.universe != b.universe:
        raise UniverseMismatchError("Cut families are defined on different universes")

    thresholds = sorted(set(a.thresholds) | set(b.thresholds))
    sets = tuple(combine(a.at(t), b.at(t)) for t in thresholds)

    return CutFamily(a.universe, tuple(thresholds), sets).normalized()


def cut_union(a: CutFamily, b: CutFamily) -> CutFamily:
    return _cut_combine(a, b, frozenset.union)


def cut_intersection(a: CutFamily, b: CutFamily) -> CutFamily:
    return _cut_combine(a, b, frozenset.intersection)


def thresholds_of(families: Sequence[CutFamily]) -> Tuple[Fraction, ...]:
    values = {ONE}
    for cf in families:
        values.update(cf.thresholds)

    return tuple(sorted(values))
