from fractions import Fraction

import pytest
import sympy

from pseudoline_workbench.arrangement.incidence import f_vector, t_vector
from pseudoline_workbench.arrangement.models import Arrangement, TVector
from pseudoline_workbench.arrangement.wiring import wiring_to_arrangement
from pseudoline_workbench.charpoly.lattice import charpoly_from_lattice, intersection_lattice, mobius_values
from pseudoline_workbench.charpoly.models import T, CharPoly, describe_polynomial, describe_roots
from pseudoline_workbench.charpoly.roots import charpoly_closed_form, charpoly_of_tvector, root_analysis, splits_over_R
from pseudoline_workbench.common.errors import InconsistentTVectorError, ParameterRangeError
from pseudoline_workbench.common.fixtures import load_fixture
from pseudoline_workbench.families.generate import near_pencil_vector


@pytest.mark.parametrize(
    "t,roots",
    [
        (TVector.from_sequence(13, [12, 4, 9]), (1, 5, 7)),
        (TVector.from_sequence(6, [3, 4]), (1, 2, 3)),
        (TVector.from_sequence(9, [6, 4, 3]), (1, 3, 5)),
        (TVector.from_sequence(15, [15, 10, 0, 6]), (1, 5, 9)),
        (TVector.from_sequence(7, [3, 6]), (1, 3, 3)),
        (TVector(n=8, counts={2: 7, 7: 1}), (1, 1, 6)),
    ],
)
def test_integral_spectra(t, roots):
    analysis = root_analysis(charpoly_of_tvector(t))
    assert analysis.splits
    assert analysis.integral
    assert analysis.integral_roots == roots


@pytest.mark.parametrize("n", range(4, 11))
def test_near_pencil_spectrum(n):
    analysis = root_analysis(charpoly_of_tvector(near_pencil_vector(n)))
    assert analysis.integral_roots == (1, 1, n - 2)


def test_a13_2_polynomial():
    p = charpoly_closed_form(13, 48)
    assert p.coefficients == (1, -13, 47, -35)
    assert describe_polynomial(p) == "t^3 - 13t^2 + 47t - 35"
    assert p.discriminant == 4
    assert describe_roots(root_analysis(p)) == "(t-1)(t-5)(t-7)"
    assert all(p.evaluate(r) == 0 for r in (1, 5, 7))


def test_kelly_moser_has_a_double_root():
    p = charpoly_of_tvector(TVector.from_sequence(7, [3, 6]))
    assert p.discriminant == 0
    assert sympy.roots(p.as_sympy()) == {1: 1, 3: 2}


def test_generic_arrangement_does_not_split():
    t = TVector(n=6, counts={2: 15})
    analysis = root_analysis(charpoly_of_tvector(t))
    assert analysis.m == 49 - 4 * 16
    assert not analysis.splits
    assert not splits_over_R(t)
    assert analysis.root_set() == ()
    assert describe_roots(analysis) == "roots: 1, (5±√(-15))/2"


def test_square_discriminants_give_integral_roots():
    assert root_analysis(charpoly_closed_form(5, 8)).integral_roots == (1, 1, 3)
    assert root_analysis(charpoly_closed_form(7, 15)).integral_roots == (1, 2, 4)
    assert root_analysis(charpoly_closed_form(8, 18)).integral_roots == (1, 2, 5)


def test_irrational_roots_are_exact():
    p = charpoly_closed_form(6, 11)
    analysis = root_analysis(p)
    assert analysis.m == 5
    assert analysis.splits and not analysis.integral
    assert analysis.root_set() == ()
    assert not analysis.roots[1].is_rational()
    assert analysis.roots[1].rational_value() is None
    assert describe_roots(analysis) == "roots: 1, (5±√5)/2"
    for root in analysis.sympy_roots():
        assert sympy.simplify(p.as_sympy().as_expr().subs(T, root)) == 0


def test_closed_form_ranges():
    with pytest.raises(ParameterRangeError):
        charpoly_closed_form(2, 4)
    with pytest.raises(ParameterRangeError):
        charpoly_closed_form(5, 3)
    with pytest.raises(ValueError):
        CharPoly(n=5, f2=8, coefficients=(1, -5, 7, 0))
    with pytest.raises(InconsistentTVectorError):
        splits_over_R(TVector.from_sequence(6, [1, 1]))


def test_triangle_lattice():
    arr = Arrangement(n=3, vertices=[(0, 1), (1, 2), (0, 2)])
    levels = intersection_lattice(arr)
    mu = mobius_values(levels)
    assert [len(level) for level in levels] == [1, 3, 3, 1]
    assert mu[frozenset()] == 1
    assert mu[frozenset({0})] == -1
    assert mu[frozenset({0, 1})] == 1
    assert mu[frozenset({0, 1, 2})] == -1
    assert str(charpoly_from_lattice(arr)) == "t^3 - 3t^2 + 3t - 1"


@pytest.mark.parametrize("name", ["a13_2.lines", "a6_1.lines", "a9_1.lines", "kelly_moser.lines", "near_pencil_5.lines"])
def test_lattice_matches_closed_form_on_fixtures(name):
    arr = load_fixture(name).to_arrangement()
    assert charpoly_from_lattice(arr) == charpoly_of_tvector(t_vector(arr))


def test_lattice_matches_closed_form_on_random_wirings(random_wirings):
    for w in random_wirings:
        arr = wiring_to_arrangement(w)
        t = t_vector(arr)
        p = charpoly_from_lattice(arr)
        assert p == charpoly_closed_form(w.n, f_vector(t).f2)
        assert p.evaluate(1) == 0
        assert p.evaluate(Fraction(1, 2)) == charpoly_of_tvector(t).evaluate(Fraction(1, 2))
