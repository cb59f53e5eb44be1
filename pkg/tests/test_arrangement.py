import random

import pytest

from pseudoline_workbench.arrangement import lines as line_sweep
from pseudoline_workbench.arrangement.chambers import chambers, measured_f_vector
from pseudoline_workbench.arrangement.incidence import (
    f_vector,
    is_near_pencil,
    is_simplicial,
    is_trivial,
    melchior_excess,
    t_vector,
    validate_arrangement,
)
from pseudoline_workbench.arrangement.lines import lines_to_arrangement, lines_to_wiring
from pseudoline_workbench.arrangement.models import Arrangement, RationalLine, TVector, WiringDiagram
from pseudoline_workbench.arrangement.wiring import (
    has_double_point_with_triple_neighbours,
    random_wiring,
    validate_wiring,
    wiring_to_arrangement,
)
from pseudoline_workbench.common.errors import (
    DuplicateLineError,
    InconsistentTVectorError,
    InvalidArrangementError,
    InvalidWiringError,
    ParameterRangeError,
    PencilError,
    WorkbenchInputError,
)
from pseudoline_workbench.common.exact import pairs
from pseudoline_workbench.common.fixtures import load_fixture


def test_a13_2_invariants(a13_2):
    t = a13_2.to_tvector()
    assert t.n == 13
    assert t.as_tuple() == (12, 4, 9)
    assert f_vector(t).as_tuple() == (25, 72, 48)
    assert is_simplicial(t)
    assert not is_near_pencil(t)
    assert t.multiplicity == 4


def test_a6_1_wiring(a6_1_wiring):
    arr = wiring_to_arrangement(a6_1_wiring)
    assert sorted(arr.vertices) == [(0, 1, 2), (0, 3), (0, 4, 5), (1, 3, 5), (1, 4), (2, 3, 4), (2, 5)]
    t = t_vector(arr)
    assert str(t) == "(3,4)"
    assert f_vector(t).as_tuple() == (7, 18, 12)


def test_kelly_moser_from_lines():
    t = load_fixture("kelly_moser.lines").to_tvector()
    assert t == TVector.from_sequence(7, [3, 6])
    assert f_vector(t).as_tuple() == (9, 24, 16)
    assert melchior_excess(t) == 0


@pytest.mark.parametrize("n", [4, 5, 6, 9])
def test_near_pencil_predicates(n):
    t = TVector(n=n, counts={2: n - 1, n - 1: 1})
    assert is_near_pencil(t)
    assert is_trivial(t)
    assert f_vector(t).f2 == 2 * n - 2


def test_triangle_is_trivial():
    t = t_vector(load_fixture("triangle.arr").to_arrangement())
    assert t.as_tuple() == (3,)
    assert is_trivial(t)
    assert not is_near_pencil(t)
    assert f_vector(t).as_tuple() == (3, 6, 4)


def test_validate_collects_every_issue():
    arr = Arrangement(n=4, vertices=[(0, 1), (0, 1, 2), (5, 3)])
    report = validate_arrangement(arr)
    assert not report.is_valid()
    text = "\n".join(report.issues)
    assert "pair {0,1} meets in 2 vertices" in text
    assert "outside [0,4)" in text
    assert "uncovered pair {2,3}" in text
    with pytest.raises(InvalidArrangementError):
        t_vector(arr)


def test_validate_flags_pencil():
    report = validate_arrangement(Arrangement(n=3, vertices=[(0, 1, 2)]))
    assert any(issue.startswith("pencil") for issue in report.issues)


def test_inconsistent_tvector_is_refused():
    with pytest.raises(InconsistentTVectorError):
        f_vector(TVector.from_sequence(6, [3, 3]))


def test_tvector_model_rejects_impossible_weights():
    with pytest.raises(ValueError):
        TVector(n=5, counts={6: 1})
    with pytest.raises(ValueError):
        TVector(n=5, counts={1: 2})
    assert TVector(n=5, counts={2: 4, 3: 0, 4: 1}).counts == {2: 4, 4: 1}


def test_invalid_wirings():
    twice = WiringDiagram(n=3, moves=[(0, 1), (0, 1), (1, 2)])
    report = validate_wiring(twice)
    assert "wires 0,1 cross 2 times" in report.issues
    with pytest.raises(InvalidWiringError):
        wiring_to_arrangement(twice)
    with pytest.raises(PencilError):
        wiring_to_arrangement(WiringDiagram(n=3, moves=[(0, 2)]))
    assert not validate_wiring(WiringDiagram(n=4, moves=[(0, 4)])).is_valid()


def test_wiring_chambers_match_f2(a6_1_wiring, near_pencil_wiring):
    assert len(chambers(a6_1_wiring)) == 12
    assert measured_f_vector(near_pencil_wiring).as_tuple() == (5, 12, 8)
    assert all(chamber.line_count() >= 3 for chamber in chambers(near_pencil_wiring))


def test_a13_2_sweep_has_only_triangles(a13_2):
    sweep = lines_to_wiring(a13_2.lines)
    assert validate_wiring(sweep.wiring).is_valid()
    assert sorted(sweep.wire_lines) == list(range(13))
    found = chambers(sweep.wiring)
    assert len(found) == 48
    assert all(chamber.is_triangle() for chamber in found)
    assert t_vector(wiring_to_arrangement(sweep.wiring)) == t_vector(lines_to_arrangement(a13_2.lines))


def test_sweep_without_a_chart_is_an_input_error(a13_2, monkeypatch):
    monkeypatch.setattr(line_sweep, "CHART_SEARCH_RANGE", 1)
    with pytest.raises(WorkbenchInputError, match="no generic sweep chart"):
        lines_to_wiring(a13_2.lines)


def test_lines_are_normalised_and_checked():
    assert RationalLine.of(2, 4, -2) == RationalLine.of("1", "2", "-1")
    assert RationalLine.of(0, 0, 5).is_at_infinity()
    with pytest.raises(DuplicateLineError):
        lines_to_arrangement([RationalLine.of(1, 0, 0), RationalLine.of(0, 1, 0), RationalLine.of(3, 0, 0)])
    with pytest.raises(PencilError):
        lines_to_arrangement([RationalLine.of(1, 0, 0), RationalLine.of(0, 1, 0), RationalLine.of(1, 1, 0)])


def test_parallel_lines_meet_at_infinity():
    lines = [RationalLine.of(1, 0, 0), RationalLine.of(1, 0, -1), RationalLine.of(0, 1, 0), RationalLine.of(0, 0, 1)]
    arr = lines_to_arrangement(lines)
    assert (0, 1, 3) in arr.vertices
    assert t_vector(arr).as_tuple() == (3, 1)


def test_double_point_with_triple_neighbours(a6_1_wiring, a13_2):
    assert has_double_point_with_triple_neighbours(a6_1_wiring)
    assert has_double_point_with_triple_neighbours(lines_to_wiring(load_fixture("kelly_moser.lines").lines).wiring)
    assert not has_double_point_with_triple_neighbours(lines_to_wiring(a13_2.lines).wiring)


def test_random_wiring_needs_three_wires(rng):
    with pytest.raises(ParameterRangeError):
        random_wiring(2, rng)


def test_random_wirings_satisfy_the_counting_identities():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randint(3, 9)
        w = random_wiring(n, rng)
        assert validate_wiring(w).is_valid()
        t = t_vector(wiring_to_arrangement(w))
        assert t.pair_count() == pairs(n)
        assert melchior_excess(t) >= 0
        f = f_vector(t)
        assert measured_f_vector(w) == f
        assert f.euler_characteristic() == 1
