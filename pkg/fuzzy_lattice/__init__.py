from fuzzy_lattice.set_algebra import (
    EMPTY,
    IRRATIONALS,
    RATIONALS,
    UNIT,
    Atom,
    RealSubset,
    Tag,
    bounds,
    canonicalize,
    closure,
    complement,
    contains,
    equals,
    intersect,
    subset_of,
    union,
)
from fuzzy_lattice.grade_lattices import (
    ClosedSubset,
    Interval,
    IntervalEmbedding,
    MonotonePWA,
    embed_unit_to_interval,
    hesitant_inter,
    hesitant_union,
    s_inter,
    s_order,
    s_union,
    xi,
)
from fuzzy_lattice.piecewise import PiecewiseFn, characteristic, delta, delta_f, grade_constructor, pw_max, pw_min
from fuzzy_lattice.fuzzy_universe import (
    CutFamily,
    Family,
    FuzzySet,
    Universe,
    cut,
    cut_family,
    cut_reconstruct,
    grade_map,
    lift_grade_map,
    membership,
    pointwise_combine,
)
from fuzzy_lattice.law_harness import (
    GenParams,
    Report,
    check_all,
    check_diagram,
    check_homomorphism,
    check_lattice_axioms,
    compare_with_oracle,
    find_counterexample,
    run_suite,
)
from fuzzy_lattice.expressions import format_grade, parse_grade_expr, parse_set_expr
from fuzzy_lattice.documents import Document, load_document, parse_document
from fuzzy_lattice.rendering import render_svg, write_svg
from fuzzy_lattice.cli import run_cli
import fuzzy_lattice.config as config

from fuzzy_lattice._version import __version__
