import pytest

from pseudoline_workbench.arrangement.formats import (
    format_arrangement,
    format_tvector,
    format_wiring,
    infer_format,
    load_input,
    parse_arrangement,
    parse_lines,
    parse_tvector,
    parse_tvectors,
    parse_wiring,
)
from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.errors import ParseError, WorkbenchInputError


def test_parse_arrangement_with_comments():
    arr = parse_arrangement("# triangle\nn=3\n0 1\n2,1  # reversed\n\n0 2\n")
    assert arr.n == 3
    assert arr.vertices == [(0, 1), (1, 2), (0, 2)]
    assert format_arrangement(arr) == "n=3\n0 1\n0 2\n1 2\n"


def test_parse_wiring_and_canonical_text(fixture_path):
    w = load_input(fixture_path("near_pencil_5.wd")).wiring
    assert w.moves == [(0, 3), (3, 4), (2, 3), (1, 2), (0, 1)]
    assert parse_wiring(format_wiring(w)) == w


def test_parse_lines_with_fractions():
    lines = parse_lines("1 -1/2 0\n0 0 3\n")
    assert str(lines[0]) == "1 -1/2 0"
    assert lines[1].is_at_infinity()


def test_parse_tvectors():
    vectors = parse_tvectors("13: 12 4 9\n7: 3 6\n")
    assert vectors == [TVector.from_sequence(13, [12, 4, 9]), TVector.from_sequence(7, [3, 6])]
    assert format_tvector(vectors[0]) == "13: 12 4 9\n"
    assert parse_tvector("15: 15 10 0 6").as_tuple() == (15, 10, 0, 6)


@pytest.mark.parametrize(
    "parser,text,line",
    [
        (parse_arrangement, "3\n0 1\n", 1),
        (parse_arrangement, "n=3\n0 x\n", 2),
        (parse_wiring, "n=4\n0..1\n2-3\n", 3),
        (parse_lines, "1 0\n", 1),
        (parse_lines, "1 0 0\n0.5 1 0\n", 2),
        (parse_tvectors, "13 12 4 9\n", 1),
        (parse_tvectors, "5: 4 0 0 0 1\n", 1),
    ],
)
def test_parse_errors_carry_the_row(parser, text, line):
    with pytest.raises(ParseError) as info:
        parser(text, "input.txt")
    assert info.value.line == line
    assert info.value.path == "input.txt"


def test_parse_tvector_wants_exactly_one():
    with pytest.raises(ParseError):
        parse_tvector("6: 3 4\n7: 3 6\n")


def test_infer_format():
    assert infer_format("x/a.wd") == "wd"
    assert infer_format("data.txt", "lines") == "lines"
    with pytest.raises(WorkbenchInputError):
        infer_format("data.txt")
    with pytest.raises(WorkbenchInputError):
        infer_format("a.wd", "svg")


def test_missing_file_is_an_input_error(tmp_path):
    with pytest.raises(WorkbenchInputError):
        load_input(str(tmp_path / "absent.arr"))


def test_undecodable_file_is_a_parse_error(tmp_path):
    path = tmp_path / "bad.wd"
    path.write_bytes(b"n=3\n0..1\n\xff\xfe\n")
    with pytest.raises(ParseError) as info:
        load_input(str(path))
    assert info.value.line == 3
    assert info.value.path == str(path)


def test_tvector_input_has_no_incidence(fixture_path):
    loaded = load_input(fixture_path("a15_1.tvec"))
    assert not loaded.has_incidence()
    with pytest.raises(WorkbenchInputError):
        loaded.to_arrangement()
    with pytest.raises(WorkbenchInputError):
        loaded.to_wiring()


def test_incidence_input_has_no_wiring(fixture_path):
    loaded = load_input(fixture_path("triangle.arr"))
    with pytest.raises(WorkbenchInputError):
        loaded.to_wiring()
