"""SVG figures for sets and grade functions.

Sets are drawn as bars over the unit segment: solid for all reals, dashed for rationals only and dotted for
irrationals only, with filled markers on included endpoints and open markers on excluded ones. Grade functions are
drawn as graphs on the unit square with the same conventions. Geometry is computed from the exact rationals and only
rounded when written, so the output is byte-for-byte deterministic.
"""
import fsspec
import logging

from fractions import Fraction
from typing import Optional, Union

from lxml import etree

import fuzzy_lattice.config as config

from fuzzy_lattice.errors import OutputError
from fuzzy_lattice.piecewise import PiecewiseFn, format_piecewise
from fuzzy_lattice.set_algebra import ONE, ZERO, Atom, RealSubset, Tag, format_subset

logger = logging.getLogger(__name__)

SVG_NAMESPACE = "http://www.w3.org/2000/svg"

_DASHES = {
    Tag.ALL: None,
    Tag.QONLY: "6,3",
    Tag.IONLY: "1,3",
}

# Rational and irrational bars of a set are drawn apart so that overlapping spans stay visible.
_BAR_OFFSETS = {
    Tag.ALL: Fraction(0),
    Tag.QONLY: Fraction(-12),
    Tag.IONLY: Fraction(12),
}


def _svg(tag: str) -> str:
    return "{{{}}}{}".format(SVG_NAMESPACE, tag)


def _num(value: Fraction) -> str:
    """Fixed-point text of a rational, rounded half to even and without trailing zeros.

    """
    scale = 10 ** config.SVG_DECIMALS
    scaled = round(Fraction(value) * scale)
    sign = "-" if scaled < 0 else ""
    whole, fraction = divmod(abs(scaled), scale)

    if fraction == 0:
        return "{}{}".format(sign, whole)

    return "{}{}.{}".format(sign, whole, str(fraction).rjust(config.SVG_DECIMALS, "0").rstrip("0"))


class _Canvas(object):
    """Maps the unit square onto the drawing area and emits the elements.

    """
    def __init__(self, width: int, height: int, title: str):
        self.width = width
        self.height = height

        self.root = etree.Element(_svg("svg"), nsmap={None: SVG_NAMESPACE})
        self.root.set("version", "1.1")
        self.root.set("width", str(width))
        self.root.set("height", str(height))
        self.root.set("viewBox", "0 0 {} {}".format(width, height))

        etree.SubElement(self.root, _svg("title")).text = title

        return

    def x(self, t: Fraction) -> Fraction:
        return config.SVG_MARGIN + t * (self.width - 2 * config.SVG_MARGIN)

    def y(self, v: Fraction) -> Fraction:
        return self.height - config.SVG_MARGIN - v * (self.height - 2 * config.SVG_MARGIN)

    def line(self, x1, y1, x2, y2, tag: Tag = Tag.ALL, css_class: str = "bar"):
        attrs = {
            "class": css_class,
            "x1": _num(x1),
            "y1": _num(y1),
            "x2": _num(x2),
            "y2": _num(y2),
            "stroke": "black",
            "stroke-width": "2" if css_class != "axis" else "1",
        }
        if _DASHES[tag] is not None:
            attrs["stroke-dasharray"] = _DASHES[tag]

        return etree.SubElement(self.root, _svg("line"), attrs)

    def marker(self, cx, cy, filled: bool):
        attrs = {
            "class": "closed" if filled else "open",
            "cx": _num(cx),
            "cy": _num(cy),
            "r": str(config.SVG_MARKER_RADIUS),
            "stroke": "black",
            "fill": "black" if filled else "white",
        }

        return etree.SubElement(self.root, _svg("circle"), attrs)

    def label(self, x, y, text: str):
        element = etree.SubElement(self.root, _svg("text"), {
            "x": _num(x),
            "y": _num(y),
            "font-size": "12",
            "text-anchor": "middle",
        })
        element.text = text

        return element

    def to_string(self) -> str:
        return etree.tostring(self.root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")

    pass


def _draw_atom(canvas: _Canvas, atom: Atom, y_lo: Fraction, y_hi: Fraction) -> None:
    x_lo = canvas.x(atom.lo)
    x_hi = canvas.x(atom.hi)

    if atom.is_point:
        canvas.marker(x_lo, y_lo, True)
        return

    canvas.line(x_lo, y_lo, x_hi, y_hi, atom.tag)

    # Irrational-only atoms never contain their rational endpoints.
    admits_rationals = atom.tag != Tag.IONLY
    canvas.marker(x_lo, y_lo, admits_rationals and atom.lo_closed)
    canvas.marker(x_hi, y_hi, admits_rationals and atom.hi_closed)

    return


def _render_subset(a: RealSubset) -> str:
    canvas = _Canvas(config.SVG_WIDTH, config.SVG_SET_HEIGHT, format_subset(a))
    baseline = Fraction(config.SVG_SET_HEIGHT, 2)

    canvas.line(canvas.x(ZERO), baseline, canvas.x(ONE), baseline, css_class="axis")
    canvas.label(canvas.x(ZERO), baseline + 24, "0")
    canvas.label(canvas.x(ONE), baseline + 24, "1")

    for atom in a.atoms:
        y = baseline + _BAR_OFFSETS[atom.tag]
        _draw_atom(canvas, atom, y, y)

    return canvas.to_string()


def _render_function(f: PiecewiseFn) -> str:
    canvas = _Canvas(config.SVG_WIDTH, config.SVG_HEIGHT, format_piecewise(f))

    # Frame of the unit square.
    canvas.line(canvas.x(ZERO), canvas.y(ZERO), canvas.x(ONE), canvas.y(ZERO), css_class="axis")
    canvas.line(canvas.x(ZERO), canvas.y(ZERO), canvas.x(ZERO), canvas.y(ONE), css_class="axis")
    canvas.line(canvas.x(ONE), canvas.y(ZERO), canvas.x(ONE), canvas.y(ONE), css_class="axis")
    canvas.line(canvas.x(ZERO), canvas.y(ONE), canvas.x(ONE), canvas.y(ONE), css_class="axis")
    canvas.label(canvas.x(ZERO), canvas.y(ZERO) + 20, "0")
    canvas.label(canvas.x(ONE), canvas.y(ZERO) + 20, "1")
    canvas.label(canvas.x(ZERO) - 16, canvas.y(ONE), "1")

    for atom, affine in f.pieces():
        _draw_atom(canvas, atom, canvas.y(affine(atom.lo)), canvas.y(affine(atom.hi)))

    return canvas.to_string()


def render_svg(obj: Union[RealSubset, PiecewiseFn]) -> str:
    """SVG 1.1 text for a set or a grade function.

    :param obj:     A RealSubset (drawn as bars) or a PiecewiseFn (drawn as a graph).
    :return:        The SVG document as text. Equal inputs give identical text.
    """
    if isinstance(obj, RealSubset):
        return _render_subset(obj)
    if isinstance(obj, PiecewiseFn):
        return _render_function(obj)

    raise TypeError("Cannot render {!r}".format(obj))


def write_svg(obj: Union[RealSubset, PiecewiseFn], path: str, fs: Optional[fsspec.AbstractFileSystem] = None) -> None:
    """Render and write an SVG file.

    :param obj:     What to render.
    :param path:    Output path.
    :param fs:      Filesystem to write to. Defaults to fsspec.open on the path, so any fsspec URL works.
    """
    opener = fsspec.open if fs is None else fs.open
    text = render_svg(obj)

    try:
        with opener(path, "wb") as handle:
            handle.write(text.encode("utf-8"))
    except OSError as e:
        raise OutputError("Cannot write {}: {}".format(path, e))

    logger.info("Wrote %s (%d bytes)", path, len(text))

    return
