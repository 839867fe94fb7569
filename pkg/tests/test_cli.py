import io
import json
import pytest

from fuzzy_lattice.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run_cli


def _run(*argv):
    stdout = io.StringIO()
    stderr = io.StringIO()
    code = run_cli(list(argv), stdout=stdout, stderr=stderr)

    return code, stdout.getvalue(), stderr.getvalue()


class TestEval(object):

    def test_s_inter(self):
        code, out, _ = _run("eval", "s_inter", "[0.3,0.7]", "{0.4,0.5,0.6}")

        assert code == EXIT_OK
        assert out == "[3/10,2/5] | {1/2} | {3/5}\n"

        return

    def test_interval_join(self):
        code, out, _ = _run("eval", "i_join", "[1/5,1/2]", "[1/4,3/10]")

        assert code == EXIT_OK
        assert out.strip() == "[1/4,1/2]"

        return

    def test_bounds_as_json(self):
        code, out, _ = _run("eval", "bounds", "(0,1/2]", "--format", "json")

        assert code == EXIT_OK
        assert json.loads(out) == {
            "op": "bounds",
            "inf": "0",
            "inf_attained": False,
            "sup": "1/2",
            "sup_attained": True,
        }

        return

    def test_bounds_of_closed_interval(self):
        code, out, _ = _run("eval", "bounds", "[3/10,7/10]", "--format", "json")

        assert code == EXIT_OK
        assert json.loads(out) == {
            "op": "bounds",
            "inf": "3/10",
            "inf_attained": True,
            "sup": "7/10",
            "sup_attained": True,
        }

        return

    def test_wrong_arity(self):
        code, out, err = _run("eval", "complement", "[0,1]", "[0,1/2]")

        assert code == EXIT_USAGE
        assert out == ""
        assert err.startswith("error: ")

        return

    def test_unknown_operation(self):
        code, _, err = _run("eval", "xor", "[0,1]", "[0,1/2]")

        assert code == EXIT_USAGE
        assert "xor" in err

        return

    def test_parse_error_as_json(self):
        code, out, _ = _run("eval", "union", "[0,1/2", "[0,1]", "--format=json")

        assert code == EXIT_USAGE
        error = json.loads(out)

        assert error["error"] == "ExpressionSyntaxError"
        assert error["position"] == 6

        return

    def test_missing_command(self):
        code, _, err = _run()

        assert code == EXIT_USAGE
        assert err.startswith("error: ")

        return

    pass


class TestOrder(object):

    @pytest.mark.parametrize("relation, left, right, expected", [
        ("subset", "[0,1/4]", "[0,1/2]", "true"),
        ("i_leq", "[1/5,1/2]", "[1/4,3/10]", "false"),
        ("c_order", "[0,1/4]", "[1/2,1]", "true"),
    ])
    def test_relations(self, relation, left, right, expected):
        code, out, _ = _run("order", relation, left, right)

        assert code == EXIT_OK
        assert out.strip() == expected

        return

    pass


class TestEmbed(object):

    @pytest.fixture()
    def document(self, tmp_path):
        path = tmp_path / "sets.txt"
        path.write_text("universe x y z\nfs A: x = 1/5; y = 1/2; z = 1\n", encoding="utf-8")

        return str(path)

    def test_embed(self, document):
        code, out, _ = _run("embed", "phi", document, "A")

        assert code == EXIT_OK
        assert out.strip() == "ivfs A_phi: x = [1/5,1/5]; y = [1/2,1/2]; z = [1,1]"

        return

    def test_membership(self, document):
        code, out, _ = _run("embed", "gamma_t2", document, "A", "--at", "0.75")

        assert code == EXIT_OK
        assert out.splitlines() == ["x 1/5", "y 1/2", "z 1"]

        return

    def test_unknown_set(self, document):
        code, _, _ = _run("embed", "phi", document, "B")

        assert code == EXIT_USAGE

        return

    def test_missing_file(self, tmp_path):
        code, _, err = _run("embed", "phi", str(tmp_path / "missing.txt"), "A")

        assert code == EXIT_USAGE
        assert err.startswith("error: ")

        return

    def test_undecodable_file(self, tmp_path):
        path = tmp_path / "binary.txt"
        path.write_bytes(b"\xff\xfe")

        code, out, err = _run("embed", "phi", str(path), "A")

        assert code == EXIT_USAGE
        assert out == ""
        assert err.startswith("error: ")

        return

    pass


class TestSuites(object):

    def test_passing_suite(self):
        code, out, _ = _run("check", "closed-lattice", "--samples", "3")

        assert code == EXIT_OK
        assert out.startswith("closed-lattice: pass")

        return

    def test_failing_suite(self):
        code, out, _ = _run("check", "hesitant-lattice", "--samples", "1", "--format", "json")

        assert code == EXIT_FAILED
        assert json.loads(out)["verdict"] == "fail"

        return

    def test_unknown_suite(self):
        code, _, _ = _run("check", "nope")

        assert code == EXIT_USAGE

        return

    def test_diagram(self):
        code, out, _ = _run("diagram", "xi-phi-theta", "--samples", "2")

        assert code == EXIT_OK
        assert out.startswith("diagram-xi-phi-theta: pass")

        return

    def test_oracle(self):
        code, _, _ = _run("oracle", "--grid", "4", "--samples", "3")

        assert code == EXIT_OK

        return

    def test_search(self):
        code, out, _ = _run("search", "s-inter-empty", "--budget", "5", "--format", "json")

        assert code == EXIT_OK
        assert json.loads(out)["witness"]["found"]

        return

    pass


class TestPlot(object):

    def test_grade_function(self, tmp_path):
        path = tmp_path / "half.svg"

        code, _, _ = _run("plot", "const(1/2)", "--out", str(path))

        assert code == EXIT_OK
        assert path.read_text(encoding="utf-8").startswith("<?xml")

        return

    def test_set(self, tmp_path):
        path = tmp_path / "set.svg"

        code, _, _ = _run("plot", "[0,1/2] | {3/4}", "--set", "--out", str(path))

        assert code == EXIT_OK
        assert path.exists()

        return

    pass
