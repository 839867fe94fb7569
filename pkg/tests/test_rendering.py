import fsspec
import logging
import pytest

from fractions import Fraction
from lxml import etree

from fuzzy_lattice.grade_lattices import Interval, xi
from fuzzy_lattice.piecewise import constant, delta, format_piecewise
from fuzzy_lattice.rendering import SVG_NAMESPACE, render_svg, write_svg
from fuzzy_lattice.set_algebra import points, segment

NS = {"svg": SVG_NAMESPACE}


def _parse(text):
    return etree.fromstring(text.encode("utf-8"))


class TestRenderSubsets(object):

    @pytest.fixture()
    def tagged(self):
        return xi(Interval(Fraction(1, 5), Fraction(1, 2)))

    def test_output_is_deterministic(self, tagged):
        assert render_svg(tagged) == render_svg(xi(Interval(Fraction(1, 5), Fraction(1, 2))))

        return

    def test_document_structure(self, tagged):
        root = _parse(render_svg(tagged))

        assert root.tag == "{{{}}}svg".format(SVG_NAMESPACE)
        assert root.get("version") == "1.1"
        assert root.find("svg:title", NS).text == "[0,1/5] | ((1/5,1/2)&II)"

        return

    def test_markers_follow_endpoints(self, tagged):
        root = _parse(render_svg(tagged))

        assert len(root.findall("svg:circle[@class='closed']", NS)) == 2
        assert len(root.findall("svg:circle[@class='open']", NS)) == 2

        return

    def test_irrational_bars_are_dotted(self, tagged):
        root = _parse(render_svg(tagged))
        bars = root.findall("svg:line[@class='bar']", NS)

        assert len(bars) == 2
        assert sorted(bar.get("stroke-dasharray", "") for bar in bars) == ["", "1,3"]

        return

    def test_single_point(self):
        root = _parse(render_svg(points(Fraction(1, 2))))

        assert len(root.findall("svg:circle[@class='closed']", NS)) == 1
        assert root.findall("svg:line[@class='bar']", NS) == []

        return

    pass


class TestRenderFunctions(object):

    def test_constant_is_a_horizontal_bar(self):
        root = _parse(render_svg(constant(Fraction(1, 2))))
        bars = root.findall("svg:line[@class='bar']", NS)

        assert len(bars) == 1
        assert bars[0].get("y1") == bars[0].get("y2")
        assert len(root.findall("svg:line[@class='axis']", NS)) == 4

        return

    def test_title_is_the_piece_listing(self):
        f = delta(segment(Fraction(3, 10), Fraction(2, 5)))

        assert _parse(render_svg(f)).find("svg:title", NS).text == format_piecewise(f)

        return

    def test_other_objects_are_refused(self):
        with pytest.raises(TypeError):
            render_svg(Fraction(1, 2))

        return

    pass


class TestWriteSvg(object):

    def test_local_file(self, tmp_path):
        path = tmp_path / "set.svg"

        write_svg(segment(0, Fraction(1, 2)), str(path))

        assert path.read_text(encoding="utf-8") == render_svg(segment(0, Fraction(1, 2)))

        return

    def test_memory_filesystem(self):
        fs = fsspec.filesystem("memory")

        write_svg(constant(1), "/figures/one.svg", fs=fs)

        assert fs.cat("/figures/one.svg").decode("utf-8") == render_svg(constant(1))

        return

    def test_write_is_logged(self, caplog):
        caplog.set_level(logging.INFO, logger="fuzzy_lattice.rendering")
        fs = fsspec.filesystem("memory")

        write_svg(constant(1), "/figures/logged.svg", fs=fs)

        size = len(render_svg(constant(1)))
        record = [r for r in caplog.records if r.name == "fuzzy_lattice.rendering"][-1]
        assert record.getMessage() == "Wrote /figures/logged.svg ({} bytes)".format(size)
        assert record.args == ("/figures/logged.svg", size)

        return

    pass
