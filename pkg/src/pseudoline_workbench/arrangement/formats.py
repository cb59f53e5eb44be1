"""
Text formats for arrangements.

  .arr    "n=<int>" then one vertex per row as line ids ("0 1 2")
  .lines  one projective line per row as three exact rationals "a b c"
  .wd     "n=<int>" then one move per row as a position block "a..b"
  .tvec   "n: t2 t3 ..." (several rows allowed where a sequence is read)

'#' starts a comment; blank rows are ignored. Writers emit the canonical
form, which parses back to the same model.
"""

from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from pseudoline_workbench.arrangement.incidence import t_vector
from pseudoline_workbench.arrangement.lines import lines_to_arrangement, lines_to_wiring
from pseudoline_workbench.arrangement.models import Arrangement, LineSweep, RationalLine, TVector, WiringDiagram
from pseudoline_workbench.arrangement.wiring import wiring_to_arrangement
from pseudoline_workbench.common.errors import ParseError, WorkbenchInputError

FORMAT_NAMES = ("arr", "lines", "wd", "tvec")

Row = Tuple[int, str]


def _rows(text: str) -> List[Row]:
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append((number, content))
    return rows


def _parse_int(token: str, path: Optional[str], line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", path, line) from None


def _parse_header(rows: List[Row], path: Optional[str]) -> Tuple[int, List[Row]]:
    if not rows:
        raise ParseError("empty input, expected header 'n=<int>'", path, None)
    number, content = rows[0]
    key, sep, value = content.partition("=")
    if not sep or key.strip() != "n":
        raise ParseError(f"expected header 'n=<int>', got {content!r}", path, number)
    return _parse_int(value.strip(), path, number, "n"), rows[1:]


def parse_arrangement(text: str, path: Optional[str] = None) -> Arrangement:
    """Parse the .arr incidence format."""
    n, rows = _parse_header(_rows(text), path)
    vertices = []
    for number, content in rows:
        ids = tuple(_parse_int(token, path, number, "line id") for token in content.replace(",", " ").split())
        vertices.append(ids)
    return Arrangement(n=n, vertices=vertices)


def parse_lines(text: str, path: Optional[str] = None) -> List[RationalLine]:
    """Parse the .lines format."""
    lines = []
    for number, content in _rows(text):
        tokens = content.split()
        if len(tokens) != 3:
            raise ParseError(f"expected three coefficients 'a b c', got {len(tokens)}", path, number)
        try:
            lines.append(RationalLine.of(*tokens))
        except ValueError as e:
            raise ParseError(f"bad line coefficients {content!r}: {_first_error(e)}", path, number) from None
    return lines


def parse_wiring(text: str, path: Optional[str] = None) -> WiringDiagram:
    """Parse the .wd move format."""
    n, rows = _parse_header(_rows(text), path)
    moves = []
    for number, content in rows:
        low, sep, high = content.partition("..")
        if not sep:
            raise ParseError(f"expected a move 'a..b', got {content!r}", path, number)
        moves.append(
            (
                _parse_int(low.strip(), path, number, "block start"),
                _parse_int(high.strip(), path, number, "block end"),
            )
        )
    return WiringDiagram(n=n, moves=moves)


def parse_tvectors(text: str, path: Optional[str] = None) -> List[TVector]:
    """Parse one or more "n: t2 t3 ..." rows."""
    vectors = []
    for number, content in _rows(text):
        head, sep, tail = content.partition(":")
        if not sep:
            raise ParseError(f"expected 'n: t2 t3 ...', got {content!r}", path, number)
        n = _parse_int(head.strip(), path, number, "n")
        values = [_parse_int(token, path, number, "count") for token in tail.replace(",", " ").split()]
        try:
            vectors.append(TVector.from_sequence(n, values))
        except ValueError as e:
            raise ParseError(f"bad t-vector: {_first_error(e)}", path, number) from None
    return vectors


def parse_tvector(text: str, path: Optional[str] = None) -> TVector:
    """Parse a .tvec file holding exactly one vector."""
    vectors = parse_tvectors(text, path)
    if len(vectors) != 1:
        raise ParseError(f"expected exactly one t-vector, found {len(vectors)}", path, None)
    return vectors[0]


def _first_error(error: ValueError) -> str:
    errors = getattr(error, "errors", None)
    if callable(errors):
        details = errors()
        if details:
            return str(details[0].get("msg", error))
    return str(error)


def format_arrangement(arr: Arrangement) -> str:
    rows = [f"n={arr.n}"] + [" ".join(str(i) for i in vertex) for vertex in sorted(arr.vertices)]
    return "\n".join(rows) + "\n"


def format_lines(lines: List[RationalLine]) -> str:
    return "".join(f"{line}\n" for line in lines)


def format_wiring(w: WiringDiagram) -> str:
    rows = [f"n={w.n}"] + [f"{a}..{b}" for a, b in w.moves]
    return "\n".join(rows) + "\n"


def format_tvector(t: TVector) -> str:
    values = " ".join(str(value) for value in t.as_tuple())
    return f"{t.n}: {values}\n"


class LoadedInput(BaseModel):
    """Whatever representation a data file provided."""
    model_config = ConfigDict(frozen=True)

    path: str
    kind: str
    arrangement: Optional[Arrangement] = None
    wiring: Optional[WiringDiagram] = None
    lines: Optional[List[RationalLine]] = None
    tvector: Optional[TVector] = None

    def has_incidence(self) -> bool:
        return self.kind != "tvec"

    def to_arrangement(self) -> Arrangement:
        """Incidence form of the input (not available for a bare t-vector)."""
        if self.arrangement is not None:
            return self.arrangement
        if self.wiring is not None:
            return wiring_to_arrangement(self.wiring)
        if self.lines is not None:
            return lines_to_arrangement(self.lines)
        raise WorkbenchInputError(f"{self.path}: a bare t-vector has no incidence structure")

    def to_wiring(self) -> WiringDiagram:
        """Wiring form; lines are swept, incidence-only input is refused."""
        if self.wiring is not None:
            return self.wiring
        if self.lines is not None:
            return lines_to_wiring(self.lines).wiring
        raise WorkbenchInputError(f"{self.path}: chamber operations need a .wd or .lines input, got .{self.kind}")

    def to_tvector(self) -> TVector:
        """t-vector of the input, validated and consistent."""
        if self.tvector is not None:
            return self.tvector.require_consistent()
        return t_vector(self.to_arrangement())


def infer_format(path: str, override: Optional[str] = None) -> str:
    """
    Pick the format from --format or the file extension.

    Raises:
        WorkbenchInputError: unknown override or extension
    """
    if override:
        if override not in FORMAT_NAMES:
            raise WorkbenchInputError(f"unknown format {override!r}; expected one of {', '.join(FORMAT_NAMES)}")
        return override
    suffix = Path(path).suffix.lstrip(".")
    if suffix not in FORMAT_NAMES:
        raise WorkbenchInputError(f"cannot infer format of {path!r}; use --format ({', '.join(FORMAT_NAMES)})")
    return suffix


def load_input(path: str, fmt: Optional[str] = None) -> LoadedInput:
    """
    Read and parse a data file.

    Args:
        path: File to read
        fmt: Format override; inferred from the extension when None

    Returns:
        LoadedInput with the parsed representation filled in
    """
    kind = infer_format(path, fmt)
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise WorkbenchInputError(f"cannot read {path}: {e.strerror or e}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"not valid UTF-8 at byte {e.start}", path, data[: e.start].count(b"\n") + 1) from None

    if kind == "arr":
        return LoadedInput(path=path, kind=kind, arrangement=parse_arrangement(text, path))
    if kind == "lines":
        return LoadedInput(path=path, kind=kind, lines=parse_lines(text, path))
    if kind == "wd":
        return LoadedInput(path=path, kind=kind, wiring=parse_wiring(text, path))
    return LoadedInput(path=path, kind=kind, tvector=parse_tvector(text, path))


def format_sweep(sweep: LineSweep) -> str:
    """Canonical .wd text of a line sweep, with the wire to line map as a comment."""
    mapping = " ".join(str(line) for line in sweep.wire_lines)
    return f"# wires are lines {mapping}\n" + format_wiring(sweep.wiring)
