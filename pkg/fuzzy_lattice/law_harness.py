"""Seeded verification of lattice laws, embeddings and commuting diagrams.

Samples are drawn from per-sample random streams derived from (seed, suite, index), so every report is a pure
function of its parameters, whatever the number of workers.
"""
import concurrent.futures
import dataclasses
import logging
import zlib

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

import fuzzy_lattice.config as config

from fuzzy_lattice.errors import EmptySetError, InvalidParamsError, LatticeError, NotOnGridError, UnknownNameError
from fuzzy_lattice.fuzzy_universe import (
    Family,
    FuzzySet,
    LatticeOp,
    Universe,
    cut,
    cut_family,
    cut_intersection,
    cut_reconstruct,
    cut_union,
    default_f,
    grade_map,
    lift_grade_map,
    pointwise_combine,
    pointwise_order,
    thresholds_of,
)
from fuzzy_lattice.grade_lattices import (
    EMBEDDINGS,
    ClosedSubset,
    Interval,
    MonotonePWA,
    closed_join,
    closed_leq,
    closed_meet,
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
from fuzzy_lattice.piecewise import (
    AffineMap,
    PiecewiseFn,
    below,
    characteristic,
    const_map,
    constant,
    delta,
    delta_f,
    pw_leq,
    pw_max,
    pw_min,
)
from fuzzy_lattice.set_algebra import (
    EMPTY,
    Atom,
    RealSubset,
    Tag,
    closure,
    complement,
    finite_points,
    format_rat,
    intersect,
    interval,
    point,
    points,
    subset_of,
    union,
)
from fuzzy_lattice.support.SampleList import SampleList

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenParams(object):
    """Parameters of the random sample streams.

    :param seed:                Root seed; identical parameters give identical streams.
    :param max_atoms:           Most atoms (or breakpoints, or grid points) per generated value.
    :param denominator_bound:   Largest denominator of generated rationals.
    :param universe_size:       Labels per generated fuzzy set. None uses the suite default.
    :param samples:             Samples per suite. None uses the suite default.
    :param workers:             Threads used to evaluate samples.
    """
    seed: int = config.DEFAULT_SEED
    max_atoms: int = config.DEFAULT_MAX_ATOMS
    denominator_bound: int = config.DEFAULT_DENOMINATOR_BOUND
    universe_size: Optional[int] = None
    samples: Optional[int] = None
    workers: int = config.DEFAULT_WORKERS

    def __post_init__(self):
        # Sanity check.
        if self.seed < 0:
            raise InvalidParamsError("The seed cannot be negative")
        for name in ("max_atoms", "denominator_bound", "workers"):
            if getattr(self, name) < 1:
                raise InvalidParamsError("{} must be positive".format(name))
        for name in ("universe_size", "samples"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise InvalidParamsError("{} must be positive".format(name))

        return

    def count(self, default: int) -> int:
        return default if self.samples is None else self.samples

    def universe(self, default: int = config.DEFAULT_UNIVERSE_SIZE) -> Universe:
        size = default if self.universe_size is None else self.universe_size
        return Universe(tuple("x{}".format(index + 1) for index in range(size)))

    pass


def sample_rng(params: GenParams, stream: str, index: int) -> np.random.Generator:
    """Random generator for one sample of one stream.

    """
    sequence = np.random.SeedSequence(entropy=params.seed, spawn_key=(zlib.crc32(stream.encode("utf-8")), index))

    return np.random.default_rng(sequence)


def _rat(rng: np.random.Generator, params: GenParams) -> Fraction:
    bound = params.denominator_bound

    if rng.random() < config.COARSE_PROBABILITY:
        choices = [d for d in config.COARSE_DENOMINATORS if d <= bound]
        denominator = int(choices[int(rng.integers(len(choices)))])
    else:
        denominator = int(rng.integers(1, bound + 1))

    return Fraction(int(rng.integers(0, denominator + 1)), denominator)


def _rat_pair(rng: np.random.Generator, params: GenParams) -> Tuple[Fraction, Fraction]:
    a = _rat(rng, params)
    b = _rat(rng, params)

    return min(a, b), max(a, b)


def _atom_count(rng: np.random.Generator, params: GenParams) -> int:
    return int(rng.integers(1, params.max_atoms + 1))


def gen_interval(rng: np.random.Generator, params: GenParams) -> Interval:
    return Interval(*_rat_pair(rng, params))


def gen_closed(rng: np.random.Generator, params: GenParams) -> ClosedSubset:
    atoms = []
    for _ in range(_atom_count(rng, params)):
        if rng.random() < 0.3:
            atoms.append(point(_rat(rng, params)))
        else:
            lo, hi = _rat_pair(rng, params)
            atoms.append(Atom(lo, hi, True, True, Tag.ALL))

    return ClosedSubset(RealSubset(atoms))


def gen_subset(rng: np.random.Generator, params: GenParams) -> RealSubset:
    """Nonempty set mixing points, half-open intervals and rational or irrational restrictions.

    """
    atoms = []
    for _ in range(_atom_count(rng, params)):
        lo, hi = _rat_pair(rng, params)
        if lo == hi or rng.random() < 0.2:
            atoms.append(point(lo))
            continue

        tag = Tag(int(rng.choice([Tag.QONLY, Tag.IONLY, Tag.ALL])))
        atoms.append(Atom(lo, hi, bool(rng.random() < 0.5), bool(rng.random() < 0.5), tag))

    return RealSubset(atoms)


def gen_grid(rng: np.random.Generator, params: GenParams) -> FrozenSet[Fraction]:
    """Nonempty finite set of multiples of 1/denominator_bound.

    """
    n = params.denominator_bound

    return frozenset(Fraction(int(rng.integers(0, n + 1)), n) for _ in range(_atom_count(rng, params)))


def _gap_map(rng: np.random.Generator, params: GenParams, lo: Fraction, hi: Fraction) -> AffineMap:
    if rng.random() < 0.5:
        return const_map(_rat(rng, params))

    start = _rat(rng, params)
    end = _rat(rng, params)
    slope = (end - start) / (hi - lo)

    return AffineMap(slope, start - slope * lo)


def _breakpoints(rng: np.random.Generator, params: GenParams) -> List[Fraction]:
    inner = {_rat(rng, params) for _ in range(int(rng.integers(0, params.max_atoms)))}

    return sorted(inner | {Fraction(0), Fraction(1)})


def gen_piecewise(rng: np.random.Generator, params: GenParams) -> PiecewiseFn:
    breakpoints = _breakpoints(rng, params)
    values = [_rat(rng, params) for _ in breakpoints]

    rational_maps = []
    irrational_maps = []
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        rational = _gap_map(rng, params, lo, hi)
        rational_maps.append(rational)
        irrational_maps.append(rational if rng.random() < 0.5 else _gap_map(rng, params, lo, hi))

    return PiecewiseFn(breakpoints, values, rational_maps, irrational_maps)


def gen_monotone(rng: np.random.Generator, params: GenParams) -> MonotonePWA:
    breakpoints = _breakpoints(rng, params)
    values = sorted(_rat(rng, params) for _ in breakpoints)

    return MonotonePWA(list(zip(breakpoints, values)))


def _gen_svfs_empty(rng: np.random.Generator, params: GenParams) -> RealSubset:
    if rng.random() < 0.15:
        return EMPTY

    return gen_subset(rng, params)


_GRADE_GENERATORS = {
    Family.FS: _rat,
    Family.IVFS: gen_interval,
    Family.SVFS: gen_subset,
    Family.SVFS_EMPTY: _gen_svfs_empty,
    Family.HFS: gen_subset,
    Family.CVFS: gen_closed,
    Family.T2FS: gen_piecewise,
}


def _fuzzy_generator(family: Family, default_size: int = config.DEFAULT_UNIVERSE_SIZE):
    grade = _GRADE_GENERATORS[family]

    def generate_fuzzy(rng: np.random.Generator, params: GenParams) -> FuzzySet:
        universe = params.universe(default_size)
        return FuzzySet(family, universe, {label: grade(rng, params) for label in universe.labels})

    return generate_fuzzy


GENERATORS: Dict[str, Callable[[np.random.Generator, GenParams], Any]] = {
    "rat": _rat,
    "interval": gen_interval,
    "closed": gen_closed,
    "subset": gen_subset,
    "grid": gen_grid,
    "piecewise": gen_piecewise,
    "monotone": gen_monotone,
}
GENERATORS.update({family.value: _fuzzy_generator(family) for family in Family})
GENERATORS["fs-cuts"] = _fuzzy_generator(Family.FS, config.CUT_UNIVERSE_SIZE)


def generate(
        kind: str,
        params: GenParams,
        stream: Optional[str] = None,
        count: Optional[int] = None,
        arity: int = 1) -> SampleList:
    """Deterministic, lazily generated samples of one kind.

    :param kind:    Generator name, e.g. "closed", "subset", "piecewise" or a family keyword such as "cvfs".
    :param params:  Generation parameters.
    :param stream:  Stream name mixed into the seed. Defaults to the kind.
    :param count:   Number of samples. Defaults to params.samples, then to 1.
    :param arity:   Values per sample. Above 1, each sample is a tuple drawn from the same stream.
    :return:        Index-addressable list of samples.
    """
    try:
        generator = GENERATORS[kind]
    except KeyError:
        raise UnknownNameError("Unknown generator '{}' (known: {})".format(kind, ", ".join(sorted(GENERATORS))))

    stream = stream or kind
    if count is None:
        count = params.count(1)

    def draw(index: int):
        rng = sample_rng(params, stream, index)
        if arity == 1:
            return generator(rng, params)
        return tuple(generator(rng, params) for _ in range(arity))

    return SampleList(draw, count)


def describe(value: Any) -> str:
    """Text of a value as it appears in reports.

    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, FuzzySet):
        return "{" + ", ".join("{}: {}".format(label, describe(grade)) for label, grade in value.items()) + "}"
    if isinstance(value, (frozenset, set)):
        return "{" + ", ".join(format_rat(q) for q in sorted(value)) + "}"
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(describe(item) for item in value) + ")"

    return str(value)


@dataclass(frozen=True)
class Failure(object):
    index: int
    law: str
    inputs: Tuple[str, ...]
    expected: str
    actual: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "law": self.law,
            "inputs": list(self.inputs),
            "expected": self.expected,
            "actual": self.actual,
        }

    pass


@dataclass
class Report(object):
    """Outcome of one suite. The verdict is "pass" iff no failure was recorded.

    Only the first failures are kept (see config.MAX_REPORTED_FAILURES), failure_count has the total.
    """
    suite: str
    samples: int
    seed: int
    failures: List[Failure] = field(default_factory=list)
    failure_count: int = 0
    gating: bool = True
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "suite": self.suite,
            "samples": self.samples,
            "seed": self.seed,
            "failures": [failure.to_dict() for failure in self.failures],
            "failure_count": self.failure_count,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            result["witness"] = self.witness

        return result

    def to_text(self) -> str:
        lines = ["{}: {} ({} samples, seed {}, {} failures)".format(
            self.suite, self.verdict, self.samples, self.seed, self.failure_count
        )]
        for failure in self.failures:
            lines.append("  #{} {}: inputs {}".format(failure.index, failure.law, ", ".join(failure.inputs)))
            lines.append("    expected {}".format(failure.expected))
            lines.append("    actual   {}".format(failure.actual))
        if self.witness is not None and self.witness.get("found"):
            lines.append("  witness   {}".format(", ".join(self.witness["candidate"])))
            lines.append("  minimized {}".format(", ".join(self.witness["minimized"])))

        return "\n".join(lines)

    pass


def _map_samples(fn: Callable[[int], List[Failure]], count: int, workers: int) -> List[List[Failure]]:
    if workers <= 1:
        return [fn(index) for index in range(count)]

    # map() keeps the input order, so failures stay ordered by sample index.
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, range(count)))


def _run(suite: str, params: GenParams, count: int, check: Callable[[int], List[Failure]], gating: bool = True):
    logger.info("Running %s with %d samples (seed %d)", suite, count, params.seed)

    failures = [failure for batch in _map_samples(check, count, params.workers) for failure in batch]
    for failure in failures:
        logger.debug("%s #%d violates %s: expected %s, got %s", suite, failure.index, failure.law,
                     failure.expected, failure.actual)

    report = Report(
        suite=suite,
        samples=count,
        seed=params.seed,
        failures=failures[:config.MAX_REPORTED_FAILURES],
        failure_count=len(failures),
        gating=gating,
    )
    logger.info("%s: %s", suite, report.verdict)

    return report


def _evaluate(index: int, law: str, inputs: Sequence[Any], body: Callable[[], Optional[Tuple[Any, Any]]]):
    """Run one law; a mismatch or a library error becomes a failure.

    """
    try:
        outcome = body()
    except LatticeError as e:
        return [Failure(index, law, tuple(describe(x) for x in inputs), "a value", "{}: {}".format(
            type(e).__name__, e
        ))]

    if outcome is None:
        return []

    expected, actual = outcome
    return [Failure(index, law, tuple(describe(x) for x in inputs), describe(expected), describe(actual))]


@dataclass(frozen=True)
class Structure(object):
    """A carrier with candidate join, meet and order, checked as a lattice.

    """
    name: str
    kind: str
    join: Callable[[Any, Any], Any]
    meet: Callable[[Any, Any], Any]
    leq: Callable[[Any, Any], bool]
    eq: Callable[[Any, Any], bool] = lambda a, b: a == b
    bottom: Optional[Callable[[GenParams], Any]] = None
    anchors: Callable[[GenParams], List[Tuple[Any, Any, Any]]] = lambda params: []

    pass


def _law_commutativity(s: Structure, a, b, c):
    for op in (s.join, s.meet):
        left, right = op(a, b), op(b, a)
        if not s.eq(left, right):
            return left, right

    return None


def _law_associativity(s: Structure, a, b, c):
    for op in (s.join, s.meet):
        left, right = op(op(a, b), c), op(a, op(b, c))
        if not s.eq(left, right):
            return left, right

    return None


def _law_idempotence(s: Structure, a, b, c):
    for op in (s.join, s.meet):
        result = op(a, a)
        if not s.eq(result, a):
            return a, result

    return None


def _law_absorption(s: Structure, a, b, c):
    result = s.join(a, s.meet(a, b))
    if not s.eq(result, a):
        return a, result

    result = s.meet(a, s.join(a, b))
    if not s.eq(result, a):
        return a, result

    return None


def _law_order_consistency(s: Structure, a, b, c):
    below = s.leq(a, b)
    by_join = s.eq(s.join(a, b), b)
    by_meet = s.eq(s.meet(a, b), a)

    if not below == by_join == by_meet:
        return (below, below, below), (below, by_join, by_meet)

    return None


def _law_upper_bound(s: Structure, a, b, c):
    join = s.join(a, b)
    meet = s.meet(a, b)

    bounds = (s.leq(a, join), s.leq(b, join), s.leq(meet, a), s.leq(meet, b))
    if not all(bounds):
        return (True,) * 4, bounds

    return None


def _law_least_upper_bound(s: Structure, a, b, c):
    join = s.join(a, b)

    for u in (c, s.join(join, c)):
        if s.leq(a, u) and s.leq(b, u) and not s.leq(join, u):
            return "{} below {}".format(describe(join), describe(u)), "not below"

    return None


def _law_greatest_lower_bound(s: Structure, a, b, c):
    meet = s.meet(a, b)

    for lower in (c, s.meet(meet, c)):
        if s.leq(lower, a) and s.leq(lower, b) and not s.leq(lower, meet):
            return "{} below {}".format(describe(lower), describe(meet)), "not below"

    return None


LATTICE_LAWS = {
    "commutativity": _law_commutativity,
    "associativity": _law_associativity,
    "idempotence": _law_idempotence,
    "absorption": _law_absorption,
    "order-consistency": _law_order_consistency,
    "upper-bound": _law_upper_bound,
    "least-upper-bound": _law_least_upper_bound,
    "greatest-lower-bound": _law_greatest_lower_bound,
}


def _spread_s() -> RealSubset:
    return interval(Fraction(3, 10), Fraction(7, 10))


def _spread_t() -> RealSubset:
    return points(Fraction(2, 5), Fraction(1, 2), Fraction(3, 5))


def _tagged_pair() -> Tuple[RealSubset, RealSubset]:
    lo, hi = Fraction(1, 5), Fraction(2, 5)
    return interval(lo, hi, False, True, Tag.QONLY), interval(lo, hi, False, True, Tag.IONLY)


def _lifted_structure(name: str, family: Family, bottom_grade: Any) -> Structure:
    return Structure(
        name=name,
        kind=family.value,
        join=partial(pointwise_combine, family, LatticeOp.JOIN),
        meet=partial(pointwise_combine, family, LatticeOp.MEET),
        leq=partial(pointwise_order, family),
        eq=lambda a, b: a.same_grades(b),
        bottom=lambda params: FuzzySet.constant(family, params.universe(), bottom_grade),
    )


def _closed_inner(rng: np.random.Generator, params: GenParams) -> RealSubset:
    return gen_closed(rng, params).inner


GENERATORS["closed-inner"] = _closed_inner


STRUCTURES: Dict[str, Structure] = {
    s.name: s for s in (
        Structure("unit", "rat", max, min, lambda a, b: a <= b, bottom=lambda params: Fraction(0)),
        Structure("interval", "interval", interval_join, interval_meet, interval_leq,
                  bottom=lambda params: Interval(0, 0)),
        Structure("closed", "closed", closed_join, closed_meet, closed_leq,
                  bottom=lambda params: ClosedSubset(points(0))),
        Structure("powerset", "subset", union, intersect, subset_of, bottom=lambda params: EMPTY),
        Structure("piecewise", "piecewise", pw_max, pw_min, pw_leq, bottom=lambda params: constant(0)),
        Structure("hesitant", "subset", hesitant_union, hesitant_inter, s_order,
                  anchors=lambda params: [(_spread_t(), _spread_s(), _spread_s())]),
        Structure("hesitant-closed", "closed-inner", hesitant_union, s_inter, s_order,
                  bottom=lambda params: points(0)),
        Structure("svfs-s", "subset", s_union, s_inter, s_order,
                  anchors=lambda params: [_tagged_pair() + (_tagged_pair()[0],)]),
        _lifted_structure("fs", Family.FS, Fraction(0)),
        _lifted_structure("ivfs", Family.IVFS, Interval(0, 0)),
        _lifted_structure("svfs0", Family.SVFS_EMPTY, EMPTY),
        _lifted_structure("cvfs", Family.CVFS, ClosedSubset(points(0))),
        _lifted_structure("t2fs", Family.T2FS, constant(0)),
        _lifted_structure("hfs", Family.HFS, points(0)),
    )
}


def _law_bottom(s: Structure, params: GenParams):
    def check(_, a, b, c):
        bottom = s.bottom(params)
        if not s.eq(s.join(bottom, a), a):
            return a, s.join(bottom, a)
        if not s.eq(s.meet(bottom, a), bottom):
            return bottom, s.meet(bottom, a)
        return None

    return check


def check_lattice_axioms(
        structure: str,
        params: GenParams,
        laws: Optional[Sequence[str]] = None,
        suite: Optional[str] = None,
        gating: bool = True) -> Report:
    """Check the lattice laws on random triples (anchors first) of a registered structure.

    :param structure:   Structure name, e.g. "closed", "interval", "t2fs".
    :param params:      Generation parameters.
    :param laws:        Subset of LATTICE_LAWS to check. Defaults to all of them, plus "bottom" when known.
    """
    try:
        s = STRUCTURES[structure]
    except KeyError:
        raise UnknownNameError("Unknown structure '{}'".format(structure))

    if laws is None:
        selected = dict(LATTICE_LAWS)
        if s.bottom is not None:
            selected["bottom"] = _law_bottom(s, params)
    else:
        selected = {name: LATTICE_LAWS[name] for name in laws}

    suite = suite or "{}-lattice".format(structure)
    anchors = s.anchors(params)
    samples = generate(s.kind, params, stream=suite, count=params.count(config.LATTICE_SAMPLES), arity=3)

    def check(index: int) -> List[Failure]:
        a, b, c = anchors[index] if index < len(anchors) else samples[index - len(anchors)]
        failures = []
        for name, law in selected.items():
            failures += _evaluate(index, name, (a, b, c), partial(law, s, a, b, c))
        return failures

    return _run(suite, params, len(anchors) + len(samples), check, gating)


@dataclass(frozen=True)
class Morphism(object):
    """A map between two registered structures, expected to be a lattice embedding or not.

    """
    name: str
    source: str
    target: str
    fn: Callable[[Any], Any]
    embedding: bool = True
    anchors: Callable[[GenParams], List[Tuple[Any, Any]]] = lambda params: []

    pass


def _lifted(*names: str) -> Callable[[FuzzySet], FuzzySet]:
    maps = [grade_map(name) for name in names]

    def apply(a: FuzzySet) -> FuzzySet:
        for gm in maps:
            a = lift_grade_map(a, gm)
        return a

    return apply


def _fs_pair(first: Fraction, second: Fraction) -> Callable[[GenParams], List[Tuple[FuzzySet, FuzzySet]]]:
    def anchors(params: GenParams):
        universe = params.universe()
        return [(FuzzySet.constant(Family.FS, universe, first), FuzzySet.constant(Family.FS, universe, second))]

    return anchors


INTERVAL_EMBEDDINGS = ("phi", "omega", "lambda", "graph", "pair")


def _morphisms() -> List[Morphism]:
    f = default_f()
    result = []

    for name, embedding in EMBEDDINGS.items():
        result.append(Morphism("grade-" + name, "unit", "interval", embedding))
    result.append(Morphism("grade-graph", "unit", "interval", grade_map("graph").fn))
    result.append(Morphism("grade-pair", "unit", "interval", grade_map("pair").fn))
    result += [
        Morphism("grade-xi", "interval", "powerset", xi),
        Morphism("grade-delta", "closed", "piecewise", delta),
        Morphism("grade-delta-f", "closed", "piecewise", partial(delta_f, f=f)),
        Morphism("grade-chi", "powerset", "piecewise", characteristic),
    ]

    for name in INTERVAL_EMBEDDINGS:
        result.append(Morphism(name, "fs", "ivfs", _lifted(name)))
    result += [
        Morphism("theta", "fs", "svfs0", _lifted("theta")),
        Morphism("xi", "ivfs", "svfs0", _lifted("xi")),
        Morphism("i-cvfs", "ivfs", "cvfs", _lifted("i_c")),
        Morphism("gamma-t2", "fs", "t2fs", _lifted("gamma_t2")),
        Morphism("lambda-bar", "fs", "t2fs", _lifted("lambda_bar")),
        Morphism("delta", "cvfs", "t2fs", _lifted("delta")),
        Morphism("delta-f", "cvfs", "t2fs", _lifted("delta_f")),
        Morphism("mu-bar", "svfs0", "t2fs", _lifted("mu_bar")),
    ]

    # Families of embeddings obtained by composing with each interval embedding.
    for name in INTERVAL_EMBEDDINGS:
        result += [
            Morphism("xi-" + name, "fs", "svfs0", _lifted(name, "xi")),
            Morphism("i-cvfs-" + name, "fs", "cvfs", _lifted(name, "i_c")),
            Morphism("mu-xi-" + name, "fs", "t2fs", _lifted(name, "xi", "mu_bar")),
            Morphism("delta-i-" + name, "fs", "t2fs", _lifted(name, "i_c", "delta")),
            Morphism("delta-f-i-" + name, "fs", "t2fs", _lifted(name, "i_c", "delta_f")),
        ]

    result += [
        Morphism("iota-hesitant", "fs", "hfs", _lifted("iota")),
        Morphism("i-hesitant", "ivfs", "hfs", _lifted("i")),
        Morphism("iota", "fs", "svfs0", _lifted("iota"), False, _fs_pair(Fraction(3, 10), Fraction(1, 2))),
        Morphism("phi-bar", "fs", "t2fs", _lifted("phi_bar"), False, _fs_pair(Fraction(3, 10), Fraction(1, 2))),
        Morphism("i", "ivfs", "svfs0", _lifted("i"), False, lambda params: [(
            FuzzySet.constant(Family.IVFS, params.universe(), Interval(Fraction(1, 10), Fraction(1, 5))),
            FuzzySet.constant(Family.IVFS, params.universe(), Interval(Fraction(1, 2), Fraction(3, 5))),
        )]),
    ]

    return result


MORPHISMS: Dict[str, Morphism] = {m.name: m for m in _morphisms()}


def check_homomorphism(name: str, params: GenParams) -> Report:
    """Check f(a∨b) = f(a)∨f(b), f(a∧b) = f(a)∧f(b) and injectivity on random pairs.

    """
    try:
        morphism = MORPHISMS[name]
    except KeyError:
        raise UnknownNameError("Unknown map '{}' (known: {})".format(name, ", ".join(sorted(MORPHISMS))))

    source = STRUCTURES[morphism.source]
    target = STRUCTURES[morphism.target]
    fn = morphism.fn

    suite = "hom-" + name
    anchors = morphism.anchors(params)
    samples = generate(source.kind, params, stream=suite, count=params.count(config.HOMOMORPHISM_SAMPLES), arity=2)

    def check(index: int) -> List[Failure]:
        a, b = anchors[index] if index < len(anchors) else samples[index - len(anchors)]

        def preserves(source_op, target_op):
            left = fn(source_op(a, b))
            right = target_op(fn(a), fn(b))
            return None if target.eq(left, right) else (left, right)

        def injective():
            if not source.eq(a, b) and target.eq(fn(a), fn(b)):
                return "distinct images", "equal images"
            return None

        failures = []
        failures += _evaluate(index, "join", (a, b), partial(preserves, source.join, target.join))
        failures += _evaluate(index, "meet", (a, b), partial(preserves, source.meet, target.meet))
        failures += _evaluate(index, "injective", (a, b), injective)
        return failures

    return _run(suite, params, len(anchors) + len(samples), check, morphism.embedding)


@dataclass(frozen=True)
class Diagram(object):
    """Paths from FS that must agree on every input.

    """
    name: str
    paths: Tuple[Tuple[str, Callable[[FuzzySet], FuzzySet]], ...]

    pass


def _delta_point_direct(a: FuzzySet) -> FuzzySet:
    # δ({t}) is t up to t and 0 after it.
    return FuzzySet(Family.T2FS, a.universe, {label: pw_min(constant(t), below(t)) for label, t in a.items()})


DIAGRAMS: Dict[str, Diagram] = {
    d.name: d for d in (
        Diagram("xi-phi-theta", (("xi∘phi", _lifted("phi", "xi")), ("theta", _lifted("theta")))),
        Diagram("mu-theta-lambda-bar", (
            ("mu_bar∘theta", _lifted("theta", "mu_bar")),
            ("lambda_bar", _lifted("lambda_bar")),
        )),
        Diagram("mu-i-lambda-lambda-bar", (
            ("mu_bar∘i∘lambda", _lifted("lambda", "i", "mu_bar")),
            ("lambda_bar", _lifted("lambda_bar")),
        )),
        Diagram("mu-iota-phi-bar", (("mu_bar∘iota", _lifted("iota", "mu_bar")), ("phi_bar", _lifted("phi_bar")))),
        Diagram("delta-i-phi", (("delta∘i_c∘phi", _lifted("phi", "i_c", "delta")), ("direct", _delta_point_direct))),
        Diagram("mu-i-omega-omega-bar", (
            ("mu_bar∘i∘omega", _lifted("omega", "i", "mu_bar")),
            ("omega_bar", _lifted("omega_bar")),
        )),
        Diagram("iota-i-phi", (("iota", _lifted("iota")), ("i∘phi", _lifted("phi", "i")))),
    )
}


def check_diagram(name: str, params: GenParams) -> Report:
    try:
        diagram = DIAGRAMS[name]
    except KeyError:
        raise UnknownNameError("Unknown diagram '{}' (known: {})".format(name, ", ".join(sorted(DIAGRAMS))))

    suite = "diagram-" + name
    samples = generate("fs", params, stream=suite, count=params.count(config.DIAGRAM_SAMPLES))

    def check(index: int) -> List[Failure]:
        a = samples[index]

        def commutes():
            (_, first), rest = diagram.paths[0], diagram.paths[1:]
            reference = first(a)
            for _, path in rest:
                other = path(a)
                if not reference.same_grades(other):
                    return reference, other
            return None

        return _evaluate(index, " = ".join(label for label, _ in diagram.paths), (a,), commutes)

    return _run(suite, params, len(samples), check)


@dataclass(frozen=True)
class Property(object):
    """A property whose witnesses are searched for. A witness is a candidate on which is_witness holds.

    """
    name: str
    kind: str
    arity: int
    is_witness: Callable[..., bool]
    expect_witness: bool = True
    anchors: Callable[[GenParams], List[Tuple[Any, ...]]] = lambda params: []

    pass


def _fs_meet(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return pointwise_combine(Family.FS, LatticeOp.MEET, a, b)


def _breaks_meet(map_name: str, target: Family) -> Callable[[FuzzySet, FuzzySet], bool]:
    lifted = _lifted(map_name)

    def check(a: FuzzySet, b: FuzzySet) -> bool:
        direct = lifted(_fs_meet(a, b))
        combined = pointwise_combine(target, LatticeOp.MEET, lifted(a), lifted(b))
        return not direct.same_grades(combined)

    return check


def _hesitant_absorption_fails(s: RealSubset, t: RealSubset) -> bool:
    return hesitant_union(t, hesitant_inter(t, s)) != t or hesitant_inter(t, hesitant_union(t, s)) != t


def _empty_bottom(s: RealSubset, t: RealSubset) -> bool:
    return s_inter(s, t) == s and not s_order(s, t)


def _delta_collides(s: RealSubset, t: RealSubset) -> bool:
    return s != t and delta(s) == delta(t)


PROPERTIES: Dict[str, Property] = {
    p.name: p for p in (
        Property("iota-meet", "fs", 2, _breaks_meet("iota", Family.SVFS_EMPTY),
                 anchors=_fs_pair(Fraction(3, 10), Fraction(1, 2))),
        Property("phi-bar-meet", "fs", 2, _breaks_meet("phi_bar", Family.T2FS),
                 anchors=_fs_pair(Fraction(3, 10), Fraction(1, 2))),
        Property("hesitant-absorption", "subset", 2, _hesitant_absorption_fails,
                 anchors=lambda params: [(_spread_s(), _spread_t())]),
        Property("s-inter-empty", "subset", 2, lambda s, t: s_inter(s, t).is_empty,
                 anchors=lambda params: [_tagged_pair()]),
        Property("closed-meet-empty", "closed", 2, lambda s, t: s_inter(s.inner, t.inner).is_empty,
                 expect_witness=False),
        Property("empty-bottom", "subset", 2, _empty_bottom,
                 anchors=lambda params: [(points(Fraction(1, 10)), interval(Fraction(1, 10), Fraction(3, 10), False))]),
        Property("delta-not-injective", "subset", 2, _delta_collides,
                 anchors=lambda params: [(interval(Fraction(1, 5), Fraction(1, 2), False), interval(Fraction(1, 5),
                                                                                                      Fraction(1, 2)))]),
    )
}


@dataclass
class Witness(object):
    property: str
    found: bool
    tried: int
    candidate: Optional[Tuple[Any, ...]] = None
    minimized: Optional[Tuple[Any, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property,
            "found": self.found,
            "tried": self.tried,
            "candidate": None if self.candidate is None else [describe(x) for x in self.candidate],
            "minimized": None if self.minimized is None else [describe(x) for x in self.minimized],
        }

    pass


def _holds(prop: Property, candidate: Tuple[Any, ...]) -> bool:
    try:
        return bool(prop.is_witness(*candidate))
    except LatticeError:
        return False


def _max_denominator(values: Iterable[Fraction]) -> int:
    return max((q.denominator for q in values), default=1)


def _subset_variants(a: RealSubset) -> Iterator[RealSubset]:
    atoms = list(a.atoms)
    if len(atoms) > 1:
        for index in range(len(atoms)):
            yield RealSubset(atoms[:index] + atoms[index + 1:])

    bound = _max_denominator([atom.lo for atom in atoms] + [atom.hi for atom in atoms]) // 2
    if bound >= 1:
        try:
            rounded = RealSubset(
                Atom(atom.lo.limit_denominator(bound), atom.hi.limit_denominator(bound), atom.lo_closed,
                     atom.hi_closed, atom.tag)
                for atom in atoms
            )
        except LatticeError:
            rounded = None
        if rounded is not None:
            yield rounded

    return


def _value_variants(value: Any) -> Iterator[Any]:
    if isinstance(value, RealSubset):
        yield from _subset_variants(value)
    elif isinstance(value, ClosedSubset):
        for variant in _subset_variants(value.inner):
            if not variant.is_empty:
                yield ClosedSubset(variant)
    elif isinstance(value, FuzzySet) and value.family == Family.FS:
        bound = _max_denominator(grade for _, grade in value.items()) // 2
        if bound >= 1:
            yield FuzzySet(Family.FS, value.universe, {
                label: grade.limit_denominator(bound) for label, grade in value.items()
            })

    return


def _drop_label(candidate: Tuple[Any, ...]) -> Iterator[Tuple[Any, ...]]:
    if not all(isinstance(value, FuzzySet) for value in candidate):
        return

    universe = candidate[0].universe
    if len(universe) < 2:
        return

    for label in universe.labels:
        smaller = Universe(tuple(other for other in universe.labels if other != label))
        yield tuple(FuzzySet(value.family, smaller, {x: value.grade(x) for x in smaller.labels}) for value in candidate)

    return


def _candidate_variants(candidate: Tuple[Any, ...]) -> Iterator[Tuple[Any, ...]]:
    yield from _drop_label(candidate)

    for position, value in enumerate(candidate):
        for variant in _value_variants(value):
            yield candidate[:position] + (variant,) + candidate[position + 1:]

    return


def shrink(prop: Property, candidate: Tuple[Any, ...]) -> Tuple[Any, ...]:
    """Greedy minimization: drop atoms or labels, then halve denominators, while the candidate stays a witness.

    """
    current = candidate

    for _ in range(config.SHRINK_STEPS):
        for variant in _candidate_variants(current):
            if _holds(prop, variant):
                current = variant
                break
        else:
            break

    return current


def find_counterexample(
        name: str,
        budget: int = config.SEARCH_BUDGET,
        seed: int = config.DEFAULT_SEED,
        params: Optional[GenParams] = None) -> Witness:
    """Search anchors first, then random candidates, for a witness of a registered property.

    :return:    The search outcome; when found, the first witness and its minimized form.
    """
    try:
        prop = PROPERTIES[name]
    except KeyError:
        raise UnknownNameError("Unknown property '{}' (known: {})".format(name, ", ".join(sorted(PROPERTIES))))

    params = params or GenParams(seed=seed)
    anchors = prop.anchors(params)[:budget]
    samples = generate(prop.kind, params, stream="search-" + name, count=max(budget - len(anchors), 0),
                       arity=prop.arity)

    def candidates() -> Iterator[Tuple[Any, ...]]:
        yield from anchors
        yield from samples

    tried = 0
    for candidate in candidates():
        tried += 1

        if _holds(prop, candidate):
            minimized = shrink(prop, candidate)
            logger.info("Witness for %s after %d candidates: %s", name, tried, describe(minimized))
            return Witness(name, True, tried, candidate, minimized)

    logger.info("No witness for %s in %d candidates", name, tried)

    return Witness(name, False, tried)


def check_witness(name: str, params: GenParams, budget: int = config.SEARCH_BUDGET) -> Report:
    """Suite form of a search: passes when the outcome matches the expectation of the property.

    """
    prop = PROPERTIES.get(name)
    if prop is None:
        raise UnknownNameError("Unknown property '{}'".format(name))

    logger.info("Searching %s (budget %d, seed %d)", name, budget, params.seed)
    witness = find_counterexample(name, budget, params.seed, params)

    failures = []
    if witness.found != prop.expect_witness:
        failures.append(Failure(
            index=witness.tried - 1,
            law="witness",
            inputs=tuple(witness.to_dict()["candidate"] or ()),
            expected="a witness" if prop.expect_witness else "no witness",
            actual="a witness" if witness.found else "no witness",
        ))

    return Report("witness-" + name, witness.tried, params.seed, failures, len(failures), witness=witness.to_dict())


def _check_grid(values: FrozenSet[Fraction], n: int) -> None:
    for q in values:
        if q < 0 or q > 1 or (q * n).denominator != 1:
            raise NotOnGridError("{} is not on the grid of step 1/{}".format(format_rat(q), n))

    return


def grid_oracle(op: str, s: FrozenSet[Fraction], t: FrozenSet[Fraction], n: int):
    """Compute ≤_S ("s_order"), ∪_S ("s_union") or ∩_S ("s_inter") on finite grid sets by enumeration.

    """
    _check_grid(s, n)
    _check_grid(t, n)
    if len(s) == 0 or len(t) == 0:
        raise EmptySetError("The oracle needs nonempty sets")

    s_inf, s_sup, t_inf, t_sup = min(s), max(s), min(t), max(t)

    if op == "s_order":
        return s_sup <= t_sup and s_inf <= t_inf and all(x in t for x in s if t_inf <= x <= s_sup)
    if op == "s_union":
        if s_inf <= t_inf:
            return frozenset(x for x in s if t_inf <= x <= s_sup) | t
        return frozenset(x for x in t if s_inf <= x <= t_sup) | s
    if op == "s_inter":
        if s_inf <= t_inf:
            return frozenset(x for x in s if s_inf <= x <= t_inf or x in t)
        return frozenset(x for x in t if t_inf <= x <= s_inf or x in s)

    raise UnknownNameError("Unknown oracle operation '{}'".format(op))


def compare_with_oracle(params: GenParams, grid: int = config.DEFAULT_DENOMINATOR_BOUND) -> Report:
    """Compare the symbolic ≤_S, ∪_S and ∩_S on finite closed sets with grid enumeration.

    """
    grid_params = dataclasses.replace(params, denominator_bound=grid)
    samples = generate("grid", grid_params, stream="oracle", count=params.count(config.ORACLE_SAMPLES), arity=2)

    def check(index: int) -> List[Failure]:
        s, t = samples[index]
        cs, ct = ClosedSubset(points(*s)), ClosedSubset(points(*t))

        symbolic = {
            "s_order": lambda: closed_leq(cs, ct),
            "s_union": lambda: finite_points(closed_join(cs, ct).inner),
            "s_inter": lambda: finite_points(closed_meet(cs, ct).inner),
        }

        failures = []
        for op, compute in symbolic.items():
            def agree(op=op, compute=compute):
                expected, actual = grid_oracle(op, s, t, grid), compute()
                return None if expected == actual else (expected, actual)
            failures += _evaluate(index, op, (s, t), agree)
        return failures

    return _run("oracle", params, len(samples), check)


def check_cut_roundtrip(params: GenParams) -> Report:
    """Cut families rebuild their set, and cuts of unions and intersections are unions and intersections of cuts.

    """
    samples = generate("fs-cuts", params, stream="cut-roundtrip", count=params.count(config.CUT_SAMPLES), arity=2)

    def check(index: int) -> List[Failure]:
        a, b = samples[index]
        join = pointwise_combine(Family.FS, LatticeOp.JOIN, a, b)
        meet = pointwise_combine(Family.FS, LatticeOp.MEET, a, b)

        def roundtrip():
            rebuilt = cut_reconstruct(cut_family(a))
            return None if rebuilt == a else (a, rebuilt)

        def cut_levels():
            for t in thresholds_of([cut_family(a), cut_family(b)]):
                if cut(join, t) != cut(a, t) | cut(b, t):
                    return cut(a, t) | cut(b, t), cut(join, t)
                if cut(meet, t) != cut(a, t) & cut(b, t):
                    return cut(a, t) & cut(b, t), cut(meet, t)
            return None

        def cut_algebra():
            if cut_union(cut_family(a), cut_family(b)) != cut_family(join):
                return "cut family of the join", "differs"
            if cut_intersection(cut_family(a), cut_family(b)) != cut_family(meet):
                return "cut family of the meet", "differs"
            return None

        failures = []
        failures += _evaluate(index, "roundtrip", (a,), roundtrip)
        failures += _evaluate(index, "cut-levels", (a, b), cut_levels)
        failures += _evaluate(index, "cut-algebra", (a, b), cut_algebra)
        return failures

    return _run("cut-roundtrip", params, len(samples), check)


def check_restriction(params: GenParams) -> Report:
    """On intervals, the closed-set operators and ≤_S coincide with the interval lattice.

    """
    samples = generate("interval", params, stream="restriction", count=params.count(config.RESTRICTION_SAMPLES),
                       arity=2)

    def check(index: int) -> List[Failure]:
        a, b = samples[index]
        ca, cb = ClosedSubset.from_interval(a), ClosedSubset.from_interval(b)

        def agree(closed_op, interval_op):
            expected = ClosedSubset.from_interval(interval_op(a, b))
            actual = closed_op(ca, cb)
            return None if expected == actual else (expected, actual)

        def order():
            expected = interval_leq(a, b)
            for actual in (closed_leq(ca, cb), s_order(ca.inner, cb.inner)):
                if actual != expected:
                    return expected, actual
            return None

        failures = []
        failures += _evaluate(index, "join", (a, b), partial(agree, closed_join, interval_join))
        failures += _evaluate(index, "meet", (a, b), partial(agree, closed_meet, interval_meet))
        failures += _evaluate(index, "order", (a, b), order)
        return failures

    return _run("restriction", params, len(samples), check)


def check_density(params: GenParams) -> Report:
    """Inclusion of nondegenerate intervals is decided equally by their rationals, their irrationals or all reals.

    """
    samples = generate("interval", params, stream="density-lemma", count=params.count(config.LATTICE_SAMPLES),
                       arity=2)

    def check(index: int) -> List[Failure]:
        a, b = samples[index]
        if a.lo == a.hi:
            return []

        def restricted(i: Interval, tag: Tag) -> RealSubset:
            if tag == Tag.IONLY and i.lo == i.hi:
                return EMPTY
            return interval(i.lo, i.hi, True, True, tag)

        def agree():
            verdicts = tuple(subset_of(restricted(a, tag), restricted(b, tag)) for tag in (Tag.QONLY, Tag.ALL,
                                                                                            Tag.IONLY))
            return None if len(set(verdicts)) == 1 else ((verdicts[1],) * 3, verdicts)

        return _evaluate(index, "density", (a, b), agree)

    return _run("density-lemma", params, len(samples), check)


def check_boolean_algebra(params: GenParams) -> Report:
    """Boolean algebra laws of the set algebra, plus the closure operator laws.

    """
    samples = generate("subset", params, stream="boolean-algebra", count=params.count(config.LATTICE_SAMPLES),
                       arity=3)

    def check(index: int) -> List[Failure]:
        a, b, c = samples[index]

        def laws():
            pairs = {
                "canonical": (RealSubset(a.atoms), a),
                "distributivity": (intersect(a, union(b, c)), union(intersect(a, b), intersect(a, c))),
                "distributivity-dual": (union(a, intersect(b, c)), intersect(union(a, b), union(a, c))),
                "de-morgan": (complement(union(a, b)), intersect(complement(a), complement(b))),
                "de-morgan-dual": (complement(intersect(a, b)), union(complement(a), complement(b))),
                "double-complement": (complement(complement(a)), a),
                "complement-union": (union(a, complement(a)), complement(EMPTY)),
                "closure-idempotent": (closure(closure(a)), closure(a)),
            }
            for law, (left, right) in pairs.items():
                if left != right:
                    return "{} holds".format(law), "{} != {}".format(describe(left), describe(right))

            checks = {
                "closure-extensive": subset_of(a, closure(a)),
                "closure-monotone": not subset_of(a, b) or subset_of(closure(a), closure(b)),
                "antisymmetry": not (subset_of(a, b) and subset_of(b, a)) or a == b,
                "transitivity": not (subset_of(a, b) and subset_of(b, c)) or subset_of(a, c),
            }
            for law, ok in checks.items():
                if not ok:
                    return "{} holds".format(law), "violated"
            return None

        return _evaluate(index, "boolean-algebra", (a, b, c), laws)

    return _run("boolean-algebra", params, len(samples), check)


def check_delta_f_identity(params: GenParams) -> Report:
    identity = MonotonePWA.identity()
    samples = generate("closed", params, stream="delta-f-identity", count=params.count(config.HOMOMORPHISM_SAMPLES))

    def check(index: int) -> List[Failure]:
        c = samples[index]

        def agree():
            expected, actual = delta(c), delta_f(c, identity)
            return None if expected == actual else (expected, actual)

        return _evaluate(index, "delta-f-identity", (c,), agree)

    return _run("delta-f-identity", params, len(samples), check)


@dataclass(frozen=True)
class Suite(object):
    name: str
    run: Callable[[GenParams], Report]
    gating: bool = True

    pass


def _suites() -> List[Suite]:
    result = []

    for structure in ("unit", "interval", "closed", "powerset", "piecewise", "fs", "ivfs", "svfs0", "cvfs", "t2fs"):
        name = structure + "-lattice"
        result.append(Suite(name, partial(check_lattice_axioms, structure, suite=name)))

    result += [
        Suite("hesitant-join-semilattice", partial(check_lattice_axioms, "hesitant-closed",
                                                   suite="hesitant-join-semilattice")),
        Suite("hesitant-lattice", partial(check_lattice_axioms, "hesitant", suite="hesitant-lattice", gating=False),
              gating=False),
        Suite("svfs-s-lattice", partial(check_lattice_axioms, "svfs-s", suite="svfs-s-lattice", gating=False),
              gating=False),
        Suite("svfs-s-join-lub", partial(check_lattice_axioms, "svfs-s", laws=("least-upper-bound",),
                                         suite="svfs-s-join-lub", gating=False), gating=False),
    ]

    for morphism in MORPHISMS.values():
        result.append(Suite("hom-" + morphism.name, partial(check_homomorphism, morphism.name), morphism.embedding))

    for diagram in DIAGRAMS:
        result.append(Suite("diagram-" + diagram, partial(check_diagram, diagram)))

    for prop in PROPERTIES:
        result.append(Suite("witness-" + prop, partial(check_witness, prop)))

    result += [
        Suite("oracle", compare_with_oracle),
        Suite("cut-roundtrip", check_cut_roundtrip),
        Suite("restriction", check_restriction),
        Suite("density-lemma", check_density),
        Suite("boolean-algebra", check_boolean_algebra),
        Suite("delta-f-identity", check_delta_f_identity),
    ]

    return result


SUITES: Dict[str, Suite] = {suite.name: suite for suite in _suites()}


def run_suite(name: str, params: GenParams) -> Report:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownNameError("Unknown suite '{}' (known: {})".format(name, ", ".join(sorted(SUITES))))

    report = suite.run(params)
    report.gating = suite.gating

    return report


def check_all(params: GenParams, include_informational: bool = False) -> List[Report]:
    """Run every gating suite (and optionally the informational ones) in registry order.

    """
    return [run_suite(name, params) for name, suite in SUITES.items() if suite.gating or include_informational]
