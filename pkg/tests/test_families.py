import pytest

from pseudoline_workbench.arrangement.chambers import chambers
from pseudoline_workbench.arrangement.incidence import t_vector
from pseudoline_workbench.arrangement.lines import lines_to_wiring
from pseudoline_workbench.arrangement.models import Chamber, TVector
from pseudoline_workbench.arrangement.wiring import random_wiring, wiring_to_arrangement
from pseudoline_workbench.common.errors import ChamberNotFoundError, ParameterRangeError, WorkbenchInputError
from pseudoline_workbench.common.fixtures import load_fixture
from pseudoline_workbench.families.audit import double_point_chamber_audit
from pseudoline_workbench.families.chamber_graph import (
    chamber_graph,
    chamber_graphs,
    chambers_with_few_triple_points,
    coxeter_test,
    solve_cox_system,
)
from pseudoline_workbench.families.detect import detect_family, is_recognized
from pseudoline_workbench.families.generate import FAMILY_NAMES, generate, r1_vector, r2_vector
from pseudoline_workbench.families.models import Family


def _tags(t):
    return [str(tag) for tag in detect_family(t.n, t)]


@pytest.mark.parametrize(
    "t,tags",
    [
        (TVector.from_sequence(6, [3, 4]), ["Coxeter(A61)", "R1(3)"]),
        (TVector.from_sequence(9, [6, 4, 3]), ["Coxeter(A91)", "R2(9)"]),
        (TVector.from_sequence(15, [15, 10, 0, 6]), ["Coxeter(A151)"]),
        (TVector.from_sequence(13, [12, 4, 9]), ["A132"]),
        (TVector.from_sequence(7, [3, 6]), ["KellyMoser"]),
        (TVector(n=5, counts={2: 4, 4: 1}), ["NearPencil(5)"]),
        (TVector.from_sequence(10, [5, 10, 0, 1]), ["R1(5)"]),
        (TVector(n=6, counts={2: 15}), ["Unrecognized"]),
    ],
)
def test_detect_family(t, tags):
    assert _tags(t) == tags


def test_unrecognized_is_not_recognized():
    assert not is_recognized(detect_family(6, TVector(n=6, counts={2: 15})))
    assert is_recognized(detect_family(7, TVector.from_sequence(7, [3, 6])))
    with pytest.raises(WorkbenchInputError):
        detect_family(8, TVector.from_sequence(7, [3, 6]))


def test_family_vectors():
    assert str(r1_vector(5)) == "(5,10,0,1)"
    assert r1_vector(3) == TVector.from_sequence(6, [3, 4])
    assert r2_vector(2) == TVector.from_sequence(9, [6, 4, 3])
    assert str(r2_vector(3)) == "(9,12,3,0,1)"
    for m in range(3, 12):
        assert r1_vector(m).is_consistent()
    for k in range(2, 10):
        assert r2_vector(k).is_consistent()


@pytest.mark.parametrize(
    "family,parameter,expected",
    [
        ("near-pencil", 6, "(5,0,0,1)"),
        ("r1", 3, "(3,4)"),
        ("r1", 4, "(4,6,1)"),
        ("r2", 2, "(6,4,3)"),
        ("coxeter", "A61", "(3,4)"),
        ("coxeter", "A91", "(6,4,3)"),
        ("a132", None, "(12,4,9)"),
        ("kelly-moser", None, "(3,6)"),
    ],
)
def test_generated_realisations_match_their_vectors(family, parameter, expected):
    generated = generate(family, parameter)
    assert str(generated.t) == expected
    assert generated.has_realisation()
    assert t_vector(wiring_to_arrangement(generated.sweep.wiring)) == generated.t


def test_vector_only_members():
    generated = generate("coxeter", "A151")
    assert not generated.has_realisation()
    assert generated.t.as_tuple() == (15, 10, 0, 6)
    assert not generate("r1", 7).has_realisation()
    assert str(generate("r2", 3).tag) == "R2(13)"


@pytest.mark.parametrize(
    "family,parameter",
    [("near-pencil", 3), ("near-pencil", None), ("r1", 2), ("r2", 1), ("r1", "x"), ("coxeter", "B3")],
)
def test_generate_rejects_bad_parameters(family, parameter):
    with pytest.raises(ParameterRangeError):
        generate(family, parameter)


def test_generate_rejects_unknown_family():
    assert "kelly-moser" in FAMILY_NAMES
    with pytest.raises(WorkbenchInputError):
        generate("b3")


def test_coxeter_test_on_a6_1(a6_1_wiring):
    result = coxeter_test(a6_1_wiring)
    assert result.chambers == 12
    assert result.is_uniform()
    assert result.x == 3
    assert str(result.tag) == "Coxeter(A61)"
    assert result.graph.edge_weights() == (3, 3)


def test_coxeter_test_on_a9_1():
    result = coxeter_test(lines_to_wiring(load_fixture("a9_1.lines").lines).wiring)
    assert result.is_uniform()
    assert result.x == 4
    assert result.tag.family is Family.COXETER


def test_near_pencil_graphs_are_isomorphic_but_disconnected(near_pencil_wiring):
    result = coxeter_test(near_pencil_wiring)
    assert result.isomorphic
    assert not result.connected
    assert not result.is_uniform()
    assert result.reason == "chamber graphs are disconnected"


def test_a13_2_is_not_coxeter(a13_2):
    result = coxeter_test(lines_to_wiring(a13_2.lines).wiring)
    assert not result.isomorphic
    assert result.classes > 1
    assert result.x is None


def test_chamber_graph_of_a6_1(a6_1_wiring):
    graphs = chamber_graphs(a6_1_wiring)
    assert len(graphs) == 12
    assert all(len(graph.lines) == 3 and graph.is_connected() for graph in graphs)
    first = chambers(a6_1_wiring)[0]
    assert chamber_graph(a6_1_wiring, first) == graphs[0]
    with pytest.raises(ChamberNotFoundError):
        chamber_graph(a6_1_wiring, Chamber(id=99, lines=(0, 1, 2), vertices=(0,)))


def test_solve_cox_system():
    a91 = solve_cox_system(4)
    assert a91.feasible and a91.n == 9 and str(a91.t) == "(6,4,3)"
    a151 = solve_cox_system(5)
    assert a151.feasible and a151.n == 15 and str(a151.t) == "(15,10,0,6)"
    singular = solve_cox_system(6)
    assert singular.singular and not singular.feasible
    for x in range(7, 101):
        assert not solve_cox_system(x).feasible, x
    with pytest.raises(ParameterRangeError):
        solve_cox_system(3)


def test_audit_on_a13_2(a13_2):
    w = lines_to_wiring(a13_2.lines).wiring
    audit = double_point_chamber_audit(w)
    assert audit.applicable
    assert audit.chambers() == 48
    assert audit.max_per_chamber() == 1
    assert audit.every_chamber_has_one()
    assert audit.is_passing()


def test_audit_on_a6_1(a6_1_wiring):
    audit = double_point_chamber_audit(a6_1_wiring)
    assert audit.applicable and audit.is_passing()
    assert audit.chambers() == 12
    assert audit.every_chamber_has_one()


def test_audit_skips_trivial_and_non_simplicial(near_pencil_wiring, rng):
    audit = double_point_chamber_audit(near_pencil_wiring)
    assert not audit.applicable
    assert audit.reason == "trivial arrangement (near pencil or triangle)"
    assert audit.is_passing()
    generic = random_wiring(5, rng, merge_probability=0.0)
    assert double_point_chamber_audit(generic).reason == "not simplicial"


def test_few_triple_point_chambers(a13_2):
    w = lines_to_wiring(a13_2.lines).wiring
    assert chambers_with_few_triple_points(w)
