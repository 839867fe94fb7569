"""Line-oriented documents declaring a universe and named fuzzy sets.

    # comment
    universe x y z
    ivfs A: x = [1/5,1/2]; y = [0,1]; z = [1,1]
    t2fs B: x = delta([3/10,2/5] | {3/5}); y = const(1/2); z = id()

Every universe label is assigned exactly once per set.
"""
import fsspec
import logging
import re

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from fuzzy_lattice.errors import DocumentError, ExpressionSyntaxError, LatticeError, UnknownNameError
from fuzzy_lattice.expressions import format_grade, parse_grade_expr, parse_interval, parse_rat, parse_set_expr
from fuzzy_lattice.fuzzy_universe import Family, FuzzySet, Universe
from fuzzy_lattice.grade_lattices import ClosedSubset
from fuzzy_lattice.set_algebra import format_rat, format_subset

logger = logging.getLogger(__name__)

_LABEL = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_SET_LINE = re.compile(r"^(?P<family>[A-Za-z_0-9]+)\s+(?P<name>[A-Za-z_][A-Za-z_0-9]*)\s*:(?P<body>.*)$")

_GRADE_PARSERS = {
    Family.FS: parse_rat,
    Family.IVFS: parse_interval,
    Family.SVFS: parse_set_expr,
    Family.SVFS_EMPTY: parse_set_expr,
    Family.HFS: parse_set_expr,
    Family.CVFS: lambda text: ClosedSubset(parse_set_expr(text)),
    Family.T2FS: parse_grade_expr,
}  # type: Dict[Family, Callable[[str], Any]]

_GRADE_FORMATTERS = {
    Family.FS: format_rat,
    Family.IVFS: str,
    Family.SVFS: format_subset,
    Family.SVFS_EMPTY: format_subset,
    Family.HFS: format_subset,
    Family.CVFS: str,
    Family.T2FS: format_grade,
}  # type: Dict[Family, Callable[[Any], str]]


@dataclass
class Document(object):
    """A universe and the fuzzy sets declared over it, in declaration order.

    """
    universe: Universe
    sets: Dict[str, FuzzySet] = field(default_factory=OrderedDict)

    def get(self, name: str) -> FuzzySet:
        try:
            return self.sets[name]
        except KeyError:
            raise UnknownNameError("No fuzzy set named '{}'".format(name))

    def names(self) -> List[str]:
        return list(self.sets)

    pass


def _strip_comment(line: str) -> str:
    index = line.find("#")
    if index >= 0:
        line = line[:index]

    return line.strip()


def _parse_universe(line: str, number: int) -> Universe:
    labels = line.split()[1:]
    for label in labels:
        if not _LABEL.match(label):
            raise DocumentError("Invalid label '{}'".format(label), number)

    try:
        return Universe(tuple(labels))
    except LatticeError as e:
        raise DocumentError(str(e), number)


def _parse_set(match, universe: Universe, number: int) -> FuzzySet:
    try:
        family = Family(match.group("family"))
    except ValueError:
        raise DocumentError("Unknown family '{}'".format(match.group("family")), number)

    parse_grade = _GRADE_PARSERS[family]
    body_start = match.start("body")
    grades = OrderedDict()

    offset = body_start
    for entry in match.group("body").split(";"):
        entry_start = offset
        offset += len(entry) + 1

        if entry.strip() == "":
            continue
        if "=" not in entry:
            raise DocumentError("Expected 'label = grade' but found '{}'".format(entry.strip()), number, entry_start)

        label, text = entry.split("=", 1)
        label = label.strip()
        text_start = entry_start + entry.index("=") + 1

        if label not in universe.labels:
            raise DocumentError("Label '{}' is not in the universe".format(label), number, entry_start)
        if label in grades:
            raise DocumentError("Label '{}' is assigned twice".format(label), number, entry_start)

        try:
            grades[label] = parse_grade(text)
        except ExpressionSyntaxError as e:
            raise DocumentError(str(e), number, text_start + e.position)
        except LatticeError as e:
            raise DocumentError("Grade of '{}': {}".format(label, e), number, text_start)

    missing = [label for label in universe.labels if label not in grades]
    if missing:
        raise DocumentError("Missing grades for {}".format(", ".join(missing)), number)

    try:
        return FuzzySet(family, universe, grades)
    except LatticeError as e:
        raise DocumentError(str(e), number)


def parse_document(text: str) -> Document:
    """Parse a document. Every error is reported as a DocumentError carrying the one-based line number.

    :param text:    Document text.
    :return:        The parsed document.
    """
    document = None  # type: Optional[Document]

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if line == "":
            continue

        if line.split()[0] == "universe":
            if document is not None:
                raise DocumentError("Universe declared twice", number)
            document = Document(_parse_universe(line, number))
            continue

        match = _SET_LINE.match(raw.split("#", 1)[0])
        if match is None:
            raise DocumentError("Expected '<family> <name>: <label> = <grade>; ...'", number)
        if document is None:
            raise DocumentError("Fuzzy set declared before the universe", number)

        name = match.group("name")
        if name in document.sets:
            raise DocumentError("Fuzzy set '{}' declared twice".format(name), number)

        document.sets[name] = _parse_set(match, document.universe, number)

    if document is None:
        raise DocumentError("Missing universe declaration")

    logger.debug("Parsed document with %d labels and %d sets", len(document.universe), len(document.sets))

    return document


def load_document(path: str, fs: Optional[fsspec.AbstractFileSystem] = None) -> Document:
    """Read and parse a UTF-8 document.

    :param path:    Path of the document.
    :param fs:      Filesystem to read from. Defaults to fsspec.open on the path, so any fsspec URL works.
    """
    opener = fsspec.open if fs is None else fs.open

    with opener(path, "rb") as handle:
        data = handle.read()

    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise DocumentError("{} is not valid UTF-8 (byte {})".format(path, e.start))

    return parse_document(text)


def format_fuzzy_set(name: str, a: FuzzySet) -> str:
    grade_text = _GRADE_FORMATTERS[a.family]

    return "{} {}: {}".format(a.family.value, name, "; ".join(
        "{} = {}".format(label, grade_text(grade)) for label, grade in a.items()
    ))


def format_document(document: Document) -> str:
    """Document text that parses back to an equal document.

    """
    lines = ["universe {}".format(" ".join(document.universe.labels))]
    lines.extend(format_fuzzy_set(name, a) for name, a in document.sets.items())

    return "\n".join(lines) + "\n"
