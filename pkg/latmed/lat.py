import re
from typing import Iterable, List, Optional, Tuple

from latmed.exceptions import ParseError
from latmed.models import Lattice


HEADER = "lat 1"
COVERS = "covers"

_number = re.compile(r"0|[1-9][0-9]*")


def _int(token: str, line_no: int) -> int:
    if not _number.fullmatch(token):
        raise ParseError(
            "expected a nonnegative integer, got {t!r}".format(t=token),
            line_no,
        )
    return int(token)


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """
    Numbered lines without comment lines and blank lines.
    """
    lines = []
    for line_no, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            raise ParseError("lines must end with a bare newline", line_no)
        if not line or line.startswith("#"):
            continue
        lines.append((line_no, line))
    return lines


def read(text: str) -> Tuple[int, Optional[str], List[Tuple[int, int]]]:
    """
    Reads element count, name and cover pairs of a lattice document
    without validating the order.
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty document", 1)
    it = iter(lines)

    line_no, line = next(it)
    if line != HEADER:
        raise ParseError(
            "expected header {h!r}, got {got!r}".format(h=HEADER, got=line),
            line_no,
        )

    line_no, line = next(it, (line_no + 1, ""))
    fields = line.split(" ")
    if len(fields) != 2 or fields[0] != "n":
        raise ParseError("expected 'n <count>'", line_no)
    n = _int(fields[1], line_no)

    name = None
    line_no, line = next(it, (line_no + 1, ""))
    if line.startswith("name "):
        name = line[len("name "):]
        if not name or " " in name:
            raise ParseError("name must be a single token", line_no)
        line_no, line = next(it, (line_no + 1, ""))
    if line != COVERS:
        raise ParseError("expected {c!r}".format(c=COVERS), line_no)

    covers = []
    for line_no, line in it:
        fields = line.split(" ")
        if len(fields) != 2:
            raise ParseError("expected a cover line '<a> <b>'", line_no)
        covers.append((_int(fields[0], line_no), _int(fields[1], line_no)))
    return n, name, covers


def read_text(file_or_path) -> str:
    try:
        with open(file_or_path, encoding="utf-8", newline="") as file:
            return file.read()
    except UnicodeDecodeError:
        raise ParseError("file is not valid UTF-8")


def loads(text: str) -> Lattice:
    n, name, covers = read(text)
    return Lattice(n, covers, name=name)


def dumps(lattice: Lattice, comments: Iterable[str] = ()) -> str:
    """
    Prints a lattice with cover lines in lexicographic order, preceded by
    the given comment lines.
    """
    lines = ["# {c}".format(c=c) for c in comments]
    lines.append(HEADER)
    lines.append("n {n}".format(n=lattice.n))
    if lattice.name is not None:
        lines.append("name {name}".format(name=lattice.name))
    lines.append(COVERS)
    lines.extend("{a} {b}".format(a=a, b=b) for a, b in sorted(lattice.covers))
    return "\n".join(lines) + "\n"


class LAT:
    """
    Main class for lattice file parse and conversion.
    """
    def __init__(self, file_or_path):
        self._file_or_path = file_or_path

    def parse(self) -> Lattice:
        """
        Parses a lattice file to the Lattice model.
        """
        return loads(read_text(self._file_or_path))

    def convert(self, lattice: Lattice, comments: Iterable[str] = ()):
        """
        Writes the Lattice model to a lattice file.
        """
        with open(self._file_or_path, "w", encoding="utf-8", newline="") as file:
            file.write(dumps(lattice, comments))


def parse(file_or_path) -> Lattice:
    return LAT(file_or_path).parse()


def convert(file_or_path, lattice: Lattice, comments: Iterable[str] = ()):
    LAT(file_or_path).convert(lattice, comments)
