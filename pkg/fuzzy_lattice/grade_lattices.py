"""Grade-level orders, lattice operators and embeddings.

Covers closed subintervals of [0,1] with the componentwise order, nonempty closed subsets with the ≤_S order and its
∪_S/∩_S operators, the hesitant operators on arbitrary nonempty sets, the embeddings of [0,1] into the intervals
given by a pair of increasing maps, and the interval-to-set embedding ξ.
"""
import bisect
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from fuzzy_lattice.errors import (
    EmptyAtomError,
    InvalidPairError,
    InvariantError,
    NotClosedError,
    RangeError,
    UnknownNameError,
)
from fuzzy_lattice.set_algebra import (
    ONE,
    ZERO,
    Atom,
    RatLike,
    RealSubset,
    Tag,
    bounds,
    format_rat,
    format_subset,
    intersect,
    is_closed,
    segment,
    subset_of,
    union,
    unit_rat,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interval(object):
    """Closed subinterval [lo, hi] of [0,1].

    """
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo = unit_rat(self.lo, "interval endpoint")
        hi = unit_rat(self.hi, "interval endpoint")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

        if lo > hi:
            raise EmptyAtomError("Inverted interval [{},{}]".format(format_rat(lo), format_rat(hi)))

        return

    def as_subset(self) -> RealSubset:
        return segment(self.lo, self.hi)

    def __str__(self):
        return "[{},{}]".format(format_rat(self.lo), format_rat(self.hi))

    pass


def interval_leq(a: Interval, b: Interval) -> bool:
    return a.lo <= b.lo and a.hi <= b.hi


def interval_join(a: Interval, b: Interval) -> Interval:
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi))


def interval_meet(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi))


class ClosedSubset(object):
    """A nonempty closed subset of [0,1]. Every atom of the wrapped set is closed and tagged All.

    """
    __slots__ = ("_inner",)

    def __init__(self, inner: RealSubset):
        # Sanity check.
        if not isinstance(inner, RealSubset):
            raise TypeError("Expected a RealSubset, got {!r}".format(inner))
        if inner.is_empty:
            raise NotClosedError("A closed-set grade cannot be empty")
        if not is_closed(inner):
            raise NotClosedError("{} is not closed".format(format_subset(inner)))

        object.__setattr__(self, "_inner", inner)

        return

    @classmethod
    def _trusted(cls, inner: RealSubset) -> "ClosedSubset":
        result = cls.__new__(cls)
        object.__setattr__(result, "_inner", inner)

        return result

    @classmethod
    def from_interval(cls, interval: Interval) -> "ClosedSubset":
        return cls._trusted(interval.as_subset())

    def __setattr__(self, key, value):
        raise AttributeError("ClosedSubset is immutable")

    @property
    def inner(self) -> RealSubset:
        return self._inner

    def __eq__(self, other):
        if not isinstance(other, ClosedSubset):
            return NotImplemented

        return self._inner == other._inner

    def __hash__(self):
        return hash(self._inner)

    def __str__(self):
        return format_subset(self._inner)

    def __repr__(self):
        return "ClosedSubset({!r})".format(format_subset(self._inner))

    pass


class MonotonePWA(object):
    """Continuous, nondecreasing, piecewise-affine map [0,1] -> [0,1] given by its breakpoints.

    :param breakpoints: Pairs (t, value) with t strictly increasing from 0 to 1.
    """
    __slots__ = ("_ts", "_values")

    def __init__(self, breakpoints: Sequence[Tuple[RatLike, RatLike]]):
        ts = [unit_rat(t, "breakpoint") for t, _ in breakpoints]
        values = [unit_rat(v, "breakpoint value") for _, v in breakpoints]

        # Sanity check.
        if len(ts) < 2 or ts[0] != ZERO or ts[-1] != ONE:
            raise RangeError("Breakpoints must run from t=0 to t=1")
        for (t0, v0), (t1, v1) in zip(zip(ts, values), zip(ts[1:], values[1:])):
            if t1 <= t0:
                raise RangeError("Breakpoints must be strictly increasing in t")
            if v1 < v0:
                raise RangeError("Map decreases between t={} and t={}".format(format_rat(t0), format_rat(t1)))

        object.__setattr__(self, "_ts", tuple(ts))
        object.__setattr__(self, "_values", tuple(values))

        return

    @classmethod
    def identity(cls) -> "MonotonePWA":
        return cls(((0, 0), (1, 1)))

    @classmethod
    def constant(cls, value: RatLike) -> "MonotonePWA":
        return cls(((0, value), (1, value)))

    def __setattr__(self, key, value):
        raise AttributeError("MonotonePWA is immutable")

    @property
    def breakpoints(self) -> List[Tuple[Fraction, Fraction]]:
        return list(zip(self._ts, self._values))

    @property
    def strict(self) -> bool:
        return all(v0 < v1 for v0, v1 in zip(self._values, self._values[1:]))

    def segment_at(self, t: Fraction) -> Tuple[Fraction, Fraction]:
        """Slope and offset of the affine piece used at t. Breakpoints belong to the piece on their right, except 1.

        """
        index = min(bisect.bisect_right(self._ts, t) - 1, len(self._ts) - 2)
        t0, t1 = self._ts[index], self._ts[index + 1]
        v0, v1 = self._values[index], self._values[index + 1]

        slope = (v1 - v0) / (t1 - t0)

        return slope, v0 - slope * t0

    def segments(self) -> List[Tuple[Fraction, Fraction, Fraction, Fraction]]:
        """The affine pieces as (t0, t1, slope, offset).

        """
        result = []
        for index in range(len(self._ts) - 1):
            t0, t1 = self._ts[index], self._ts[index + 1]
            v0, v1 = self._values[index], self._values[index + 1]
            slope = (v1 - v0) / (t1 - t0)
            result.append((t0, t1, slope, v0 - slope * t0))

        return result

    def __call__(self, t: RatLike) -> Fraction:
        t = unit_rat(t)
        slope, offset = self.segment_at(t)

        return slope * t + offset

    def __eq__(self, other):
        if not isinstance(other, MonotonePWA):
            return NotImplemented

        # Compare as functions: collinear breakpoints do not matter.
        ts = sorted(set(self._ts) | set(other._ts))
        return all(self(t) == other(t) for t in ts)

    def __hash__(self):
        return hash(tuple(self(t) for t in (ZERO, Fraction(1, 2), ONE)))

    def __repr__(self):
        return "MonotonePWA({})".format(", ".join(
            "({},{})".format(format_rat(t), format_rat(v)) for t, v in self.breakpoints
        ))

    pass


class IntervalEmbedding(object):
    """Embedding t -> [h1(t), h2(t)] of [0,1] into the intervals.

    Both maps are increasing, h1 <= h2 everywhere and at least one of them is strictly increasing, which makes the
    embedding injective.
    """
    def __init__(self, h1: MonotonePWA, h2: MonotonePWA, name: str = "pair"):
        self.h1 = h1
        self.h2 = h2
        self.name = name

        # Sanity check. The difference of two piecewise-affine maps is affine between their merged breakpoints.
        ts = sorted({t for t, _ in h1.breakpoints} | {t for t, _ in h2.breakpoints})
        for t in ts:
            if h1(t) > h2(t):
                raise InvalidPairError("h1 exceeds h2 at t={}".format(format_rat(t)))
        if not (h1.strict or h2.strict):
            raise InvalidPairError("At least one of h1, h2 must be strictly increasing")

        return

    def __call__(self, t: RatLike) -> Interval:
        return Interval(self.h1(t), self.h2(t))

    def __repr__(self):
        return "IntervalEmbedding({}, {!r}, {!r})".format(self.name, self.h1, self.h2)

    pass


PHI = IntervalEmbedding(MonotonePWA.identity(), MonotonePWA.identity(), "phi")
OMEGA = IntervalEmbedding(MonotonePWA.identity(), MonotonePWA.constant(1), "omega")
GAMMA = IntervalEmbedding(MonotonePWA.constant(0), MonotonePWA.identity(), "gamma")

EMBEDDINGS = {
    "phi": PHI,
    "omega": OMEGA,
    "gamma": GAMMA,
}


def graph_embedding(f: MonotonePWA) -> IntervalEmbedding:
    """The embedding t -> [t, f(t)] for an increasing f lying above the diagonal.

    """
    return IntervalEmbedding(MonotonePWA.identity(), f, "graph")


def embed_unit_to_interval(t: RatLike, kind: Union[str, IntervalEmbedding]) -> Interval:
    """Image of t under a named embedding ("phi", "omega", "gamma") or an explicit pair.

    """
    if isinstance(kind, str):
        try:
            kind = EMBEDDINGS[kind.lower()]
        except KeyError:
            raise UnknownNameError("Unknown embedding '{}'".format(kind))

    return kind(t)


def xi(interval: Interval) -> RealSubset:
    """The set of rationals in [0,lo] together with the irrationals in [0,hi].

    """
    atoms = [Atom(ZERO, interval.lo, True, True, Tag.QONLY)]

    # No irrational lies in [0,0].
    if interval.hi > ZERO:
        atoms.append(Atom(ZERO, interval.hi, True, True, Tag.IONLY))

    return RealSubset(atoms)


def s_order(s: RealSubset, t: RealSubset) -> bool:
    """S ≤_S T: both bounds of S are below those of T and S restricted to [inf T, sup S] lies in T.

    """
    bs = bounds(s)
    bt = bounds(t)

    if bs.sup > bt.sup or bs.inf > bt.inf:
        return False

    return subset_of(intersect(s, segment(bt.inf, bs.sup)), t)


def s_union(s: RealSubset, t: RealSubset) -> RealSubset:
    bs = bounds(s)
    bt = bounds(t)

    # Ties take the first branch.
    if bs.inf <= bt.inf:
        return union(intersect(s, segment(bt.inf, bs.sup)), t)

    return union(intersect(t, segment(bs.inf, bt.sup)), s)


def s_inter(s: RealSubset, t: RealSubset) -> RealSubset:
    """S ∩_S T. The result may be empty when the operands are not closed.

    """
    bs = bounds(s)
    bt = bounds(t)

    if bs.inf <= bt.inf:
        return intersect(s, union(segment(bs.inf, bt.inf), t))

    return intersect(t, union(segment(bt.inf, bs.inf), s))


def hesitant_union(s: RealSubset, t: RealSubset) -> RealSubset:
    threshold = max(bounds(s).inf, bounds(t).inf)

    return intersect(union(s, t), segment(threshold, ONE))


def hesitant_inter(s: RealSubset, t: RealSubset) -> RealSubset:
    threshold = min(bounds(s).sup, bounds(t).sup)

    return intersect(union(s, t), segment(ZERO, threshold))


def _closed_result(result: RealSubset, op: str) -> ClosedSubset:
    if result.is_empty or not is_closed(result):
        raise InvariantError("{} produced {}, which is not a nonempty closed set".format(op, format_subset(result)))

    return ClosedSubset._trusted(result)


def closed_join(s: ClosedSubset, t: ClosedSubset) -> ClosedSubset:
    return _closed_result(s_union(s.inner, t.inner), "closed_join")


def closed_meet(s: ClosedSubset, t: ClosedSubset) -> ClosedSubset:
    return _closed_result(s_inter(s.inner, t.inner), "closed_meet")


def closed_leq(s: ClosedSubset, t: ClosedSubset) -> bool:
    return s_order(s.inner, t.inner)


def interval_to_closed(interval: Interval) -> ClosedSubset:
    return ClosedSubset.from_interval(interval)

