from fractions import Fraction

# Random generation.
DEFAULT_SEED = 20180101
DEFAULT_DENOMINATOR_BOUND = 64
DEFAULT_MAX_ATOMS = 6
DEFAULT_UNIVERSE_SIZE = 3
DEFAULT_WORKERS = 1

# Denominators preferred by the generators, so that ties between bounds show up regularly.
COARSE_DENOMINATORS = (1, 2, 4, 5, 10)
COARSE_PROBABILITY = 0.35

# Samples per suite.
LATTICE_SAMPLES = 1000
HOMOMORPHISM_SAMPLES = 500
DIAGRAM_SAMPLES = 500
ORACLE_SAMPLES = 1000
CUT_SAMPLES = 200
CUT_UNIVERSE_SIZE = 8
RESTRICTION_SAMPLES = 500

# Counterexample search.
SEARCH_BUDGET = 10000
SHRINK_STEPS = 200

# Fixed maps used by the Δ_f, graph and pair suites (breakpoints (t, value)).
DELTA_F_BREAKPOINTS = ((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 4)), (Fraction(1), Fraction(1)))
GRAPH_F_BREAKPOINTS = ((Fraction(0), Fraction(1, 4)), (Fraction(1, 2), Fraction(3, 4)), (Fraction(1), Fraction(1)))
PAIR_H1_BREAKPOINTS = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1, 2)))
PAIR_H2_BREAKPOINTS = ((Fraction(0), Fraction(1, 4)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(1)))

# SVG geometry, in user units.
SVG_WIDTH = 480
SVG_HEIGHT = 480
SVG_SET_HEIGHT = 120
SVG_MARGIN = 40
SVG_MARKER_RADIUS = 4
SVG_DECIMALS = 3

# Reports keep the first failures only, the total is counted separately.
MAX_REPORTED_FAILURES = 20
