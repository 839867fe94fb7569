import dataclasses
import pytest

from fractions import Fraction

import fuzzy_lattice.config as config

from fuzzy_lattice.errors import EmptySetError, InvalidParamsError, NotOnGridError, UnknownNameError
from fuzzy_lattice.law_harness import (
    DIAGRAMS,
    PROPERTIES,
    SUITES,
    GenParams,
    check_diagram,
    check_homomorphism,
    check_lattice_axioms,
    check_witness,
    compare_with_oracle,
    describe,
    find_counterexample,
    generate,
    grid_oracle,
    run_suite,
)
from fuzzy_lattice.set_algebra import RealSubset


class TestGenParams(object):

    def test_defaults(self):
        params = GenParams()

        assert params.count(7) == 7
        assert params.universe().labels == ("x1", "x2", "x3")
        assert GenParams(samples=4, universe_size=2).count(7) == 4
        assert len(GenParams(universe_size=2).universe()) == 2

        return

    @pytest.mark.parametrize("kwargs", [
        {"seed": -1},
        {"samples": 0},
        {"workers": 0},
        {"denominator_bound": 0},
        {"universe_size": 0},
    ])
    def test_invalid_params(self, kwargs):
        with pytest.raises(InvalidParamsError):
            GenParams(**kwargs)

        return

    pass


class TestGenerate(object):

    def test_streams_are_deterministic(self):
        params = GenParams(seed=11, samples=4)

        first = generate("subset", params)
        second = generate("subset", params)

        assert len(first) == 4
        assert list(first) == list(second)
        assert all(isinstance(a, RealSubset) for a in first)

        return

    def test_samples_do_not_depend_on_access_order(self):
        params = GenParams(seed=3, samples=5)

        forward = list(generate("piecewise", params))
        backward = generate("piecewise", params)

        assert [backward[index] for index in reversed(range(5))] == list(reversed(forward))

        return

    def test_tuples(self):
        samples = generate("interval", GenParams(samples=2), arity=3)

        assert all(len(sample) == 3 for sample in samples)

        return

    def test_fuzzy_sets_follow_universe_size(self):
        a = generate("cvfs", GenParams(universe_size=4))[0]

        assert len(a.universe) == 4

        return

    def test_unknown_generator(self):
        with pytest.raises(UnknownNameError):
            generate("nope", GenParams())

        return

    pass


class TestSuites(object):

    @pytest.fixture()
    def params(self):
        return GenParams(samples=8)

    @pytest.mark.parametrize("structure", ["unit", "interval", "closed", "powerset", "fs", "cvfs"])
    def test_lattices_pass(self, structure, params):
        report = check_lattice_axioms(structure, params)

        assert report.passed, report.to_text()
        assert report.samples == 8

        return

    def test_hesitant_operators_are_not_a_lattice(self):
        report = run_suite("hesitant-lattice", GenParams(samples=1))

        assert not report.passed
        assert not report.gating
        assert report.failures[0].index == 0

        return

    @pytest.mark.parametrize("name", ["phi", "omega", "xi", "delta", "grade-delta"])
    def test_embeddings_pass(self, name, params):
        assert check_homomorphism(name, params).passed

        return

    def test_iota_is_not_a_homomorphism(self):
        report = check_homomorphism("iota", GenParams(samples=1))

        assert not report.passed
        assert not report.gating

        return

    @pytest.mark.parametrize("name", sorted(DIAGRAMS))
    def test_diagrams_commute(self, name):
        assert check_diagram(name, GenParams(samples=4)).passed

        return

    def test_oracle_agrees(self, params):
        assert compare_with_oracle(params, grid=8).passed

        return

    @pytest.mark.parametrize("name", ["cut-roundtrip", "restriction", "density-lemma", "boolean-algebra",
                                      "delta-f-identity", "hesitant-join-semilattice"])
    def test_property_suites_pass(self, name):
        report = run_suite(name, GenParams(samples=4))

        assert report.passed, report.to_text()
        assert report.gating

        return

    def test_worker_threads_give_the_same_report(self):
        single = run_suite("boolean-algebra", GenParams(samples=6, workers=1))
        threaded = run_suite("boolean-algebra", GenParams(samples=6, workers=3))

        assert single.to_dict() == threaded.to_dict()

        return

    def test_report_schema(self, params):
        data = run_suite("restriction", params).to_dict()

        assert set(data) == {"suite", "samples", "seed", "failures", "failure_count", "verdict"}
        assert data["verdict"] == "pass"
        assert data["seed"] == params.seed

        return

    def test_unknown_suite(self, params):
        with pytest.raises(UnknownNameError):
            run_suite("nope", params)
        with pytest.raises(UnknownNameError):
            check_diagram("nope", params)

        return

    def test_registry(self):
        assert "closed-lattice" in SUITES and SUITES["closed-lattice"].gating
        assert not SUITES["svfs-s-join-lub"].gating

        return

    pass


class TestCounterexamples(object):

    @pytest.mark.parametrize("name", ["hesitant-absorption", "s-inter-empty", "iota-meet", "delta-not-injective"])
    def test_anchored_witnesses(self, name):
        witness = find_counterexample(name, budget=5)

        assert witness.found
        assert witness.tried == 1
        assert PROPERTIES[name].is_witness(*witness.minimized)

        return

    @pytest.mark.parametrize("name", sorted(PROPERTIES))
    def test_random_search_without_anchors(self, name, monkeypatch):
        monkeypatch.setitem(PROPERTIES, name, dataclasses.replace(PROPERTIES[name], anchors=lambda params: []))

        witness = find_counterexample(name)

        assert witness.found == PROPERTIES[name].expect_witness
        if witness.found:
            assert PROPERTIES[name].is_witness(*witness.candidate)
            assert PROPERTIES[name].is_witness(*witness.minimized)
        else:
            assert witness.tried == config.SEARCH_BUDGET

        return

    def test_witness_report(self):
        report = check_witness("s-inter-empty", GenParams(), budget=5)

        assert report.passed
        assert report.witness["found"]

        return

    def test_closed_sets_never_meet_emptily(self):
        report = check_witness("closed-meet-empty", GenParams(), budget=50)

        assert report.passed
        assert not report.witness["found"]
        assert report.samples == 50

        return

    def test_unknown_property(self):
        with pytest.raises(UnknownNameError):
            find_counterexample("nope")

        return

    pass


class TestGridOracle(object):
    """s = {0, 1/2} and t = {1/4, 1} on the grid of step 1/4.

    """

    @pytest.fixture()
    def s(self):
        return frozenset((Fraction(0), Fraction(1, 2)))

    @pytest.fixture()
    def t(self):
        return frozenset((Fraction(1, 4), Fraction(1)))

    def test_order(self, s, t):
        assert not grid_oracle("s_order", s, t, 4)
        assert grid_oracle("s_order", s, s, 4)

        return

    def test_union(self, s, t):
        assert grid_oracle("s_union", s, t, 4) == {Fraction(1, 4), Fraction(1, 2), Fraction(1)}

        return

    def test_intersection(self, s, t):
        assert grid_oracle("s_inter", s, t, 4) == {Fraction(0)}

        return

    def test_off_grid_values(self, s):
        with pytest.raises(NotOnGridError):
            grid_oracle("s_union", s, frozenset((Fraction(1, 3),)), 4)

        return

    def test_empty_sets(self, s):
        with pytest.raises(EmptySetError):
            grid_oracle("s_inter", s, frozenset(), 4)

        return

    def test_unknown_operation(self, s, t):
        with pytest.raises(UnknownNameError):
            grid_oracle("s_xor", s, t, 4)

        return

    pass


class TestDescribe(object):

    def test_values(self):
        assert describe(Fraction(1, 2)) == "1/2"
        assert describe(True) == "true"
        assert describe(frozenset((Fraction(1, 2), Fraction(0)))) == "{0, 1/2}"
        assert describe((Fraction(1), False)) == "(1, false)"

        return

    pass
