import fsspec
import logging
import pytest

from fractions import Fraction

from fuzzy_lattice.documents import format_document, load_document, parse_document
from fuzzy_lattice.errors import DocumentError, UnknownNameError
from fuzzy_lattice.fuzzy_universe import Family
from fuzzy_lattice.grade_lattices import ClosedSubset, Interval
from fuzzy_lattice.piecewise import constant, identity
from fuzzy_lattice.set_algebra import EMPTY, RATIONALS

SAMPLE = """\
# Every family once.
universe x y z

fs A: x = 1/5; y = 0.5; z = 1
ivfs B: x = [1/5,1/2]; y = [0,1]; z = [1,1]
svfs0 C: x = EMPTY; y = QQ; z = {1/2}   # empty grades are allowed here
hfs D: x = [3/10,7/10]; y = {2/5,1/2,3/5}; z = [0,1]
cvfs E: x = [0,1/4] | {1/2}; y = [0,1]; z = {1}
t2fs F: x = delta([3/10,2/5] | {3/5}); y = const(1/2); z = id()
"""


class TestParseDocument(object):

    @pytest.fixture()
    def document(self):
        return parse_document(SAMPLE)

    def test_universe_and_names(self, document):
        assert document.universe.labels == ("x", "y", "z")
        assert document.names() == ["A", "B", "C", "D", "E", "F"]

        return

    def test_grades(self, document):
        assert document.get("A").grade("y") == Fraction(1, 2)
        assert document.get("B").grade("x") == Interval(Fraction(1, 5), Fraction(1, 2))
        assert document.get("C").grade("x") == EMPTY
        assert document.get("C").grade("y") == RATIONALS
        assert document.get("D").family == Family.HFS
        assert isinstance(document.get("E").grade("x"), ClosedSubset)
        assert document.get("F").grade("y") == constant(Fraction(1, 2))
        assert document.get("F").grade("z") == identity()

        return

    def test_unknown_set(self, document):
        with pytest.raises(UnknownNameError):
            document.get("G")

        return

    def test_formatted_document_parses_back(self, document):
        assert parse_document(format_document(document)) == document

        return

    def test_undeclared_label(self):
        with pytest.raises(DocumentError) as info:
            parse_document("universe x y\nfs A: x = 0; w = 1\n")

        assert info.value.line == 2
        assert str(info.value).startswith("line 2: ")

        return

    def test_missing_label(self):
        with pytest.raises(DocumentError) as info:
            parse_document("universe x y\nfs A: x = 0\n")

        assert "y" in str(info.value)

        return

    def test_label_assigned_twice(self):
        with pytest.raises(DocumentError):
            parse_document("universe x y\nfs A: x = 0; x = 1; y = 0\n")

        return

    def test_set_before_universe(self):
        with pytest.raises(DocumentError) as info:
            parse_document("fs A: x = 0\nuniverse x\n")

        assert info.value.line == 1

        return

    def test_missing_universe(self):
        with pytest.raises(DocumentError):
            parse_document("# nothing here\n")

        return

    def test_unknown_family(self):
        with pytest.raises(DocumentError):
            parse_document("universe x\nxyz A: x = 0\n")

        return

    def test_syntax_error_position(self):
        with pytest.raises(DocumentError) as info:
            parse_document("universe x y z\n\nfs A: x = 1/5; y = 1/0; z = 1\n")

        assert info.value.line == 3
        assert info.value.position == 19

        return

    def test_closed_family_checks_grades(self):
        with pytest.raises(DocumentError):
            parse_document("universe x\ncvfs A: x = [0,1/2)\n")

        return

    def test_strict_set_family_refuses_empty_grades(self):
        with pytest.raises(DocumentError):
            parse_document("universe x\nsvfs A: x = EMPTY\n")

        return

    pass


class TestLoadDocument(object):

    def test_local_file(self, tmp_path):
        path = tmp_path / "sets.txt"
        path.write_text(SAMPLE, encoding="utf-8")

        document = load_document(str(path))

        assert document == parse_document(SAMPLE)

        return

    def test_memory_filesystem(self):
        fs = fsspec.filesystem("memory")
        fs.pipe("/documents/sets.txt", SAMPLE.encode("utf-8"))

        document = load_document("/documents/sets.txt", fs=fs)

        assert document.get("A").grade("z") == 1

        return

    def test_undecodable_file(self, tmp_path):
        path = tmp_path / "binary.txt"
        path.write_bytes(b"\xff\xfe")

        with pytest.raises(DocumentError) as info:
            load_document(str(path))

        assert "UTF-8" in str(info.value)

        return

    def test_parse_is_logged(self, caplog):
        caplog.set_level(logging.DEBUG, logger="fuzzy_lattice.documents")

        parse_document(SAMPLE)

        record = [r for r in caplog.records if r.name == "fuzzy_lattice.documents"][-1]
        assert record.getMessage() == "Parsed document with 3 labels and 6 sets"
        assert record.args == (3, 6)

        return

    pass
