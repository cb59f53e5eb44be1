from fractions import Fraction

import pytest

from pseudoline_workbench.feasibility.linear import (
    Infeasible,
    IntForm,
    deduplicate,
    eliminate,
    normalise,
    projections,
    substitute,
)
from pseudoline_workbench.inequalities.models import LinearForm


def test_normalise_scales_to_primitive_integers():
    form = normalise({2: Fraction(1, 2), 4: Fraction(1)}, Fraction(-3, 4))
    assert form.coefficients == {2: 1, 4: 2}
    # t2 + 2 t4 >= 3/2 only has integer solutions with t2 + 2 t4 >= 2
    assert form.constant == -2


def test_normalise_strict_and_constant_forms():
    assert normalise({2: Fraction(1)}, Fraction(0), strict=True).constant == -1
    assert normalise({}, Fraction(5)) is None
    with pytest.raises(Infeasible):
        normalise({}, Fraction(-1, 3))


def test_substitute_eliminates_t3():
    # t3 >= 0 on 6 lines with m = 3 becomes t2 <= 15
    form = substitute(LinearForm.of(0, {3: 1}), 6, 3)
    assert form.coefficients == {2: -1}
    assert form.constant == 15
    # t3 >= 0 with m = 4 also involves t4
    form = substitute(LinearForm.of(0, {3: 1}), 9, 4)
    assert form.coefficients == {2: -1, 4: -6}
    assert form.constant == 36


def test_substitute_drops_weights_above_m():
    assert substitute(LinearForm.of(0, {5: 1}), 9, 4) is None
    with pytest.raises(Infeasible):
        substitute(LinearForm.of(-1, {5: 1}), 9, 4)


def test_deduplicate_keeps_the_tightest():
    forms = deduplicate([IntForm({2: 1}, -1), IntForm({2: 1}, -3), IntForm({4: 1}, 0)])
    assert sorted((f.key, f.constant) for f in forms) == [(((2, 1),), -3), (((4, 1),), 0)]


def test_eliminate_combines_opposite_signs():
    forms = [IntForm({2: 1, 4: 1}, -1), IntForm({2: -1}, 0), IntForm({4: -1}, 5)]
    projected = eliminate(forms, 2, cap=10)
    assert sorted((f.key, f.constant) for f in projected) == [(((4, -1),), 5), (((4, 1),), -1)]


def test_eliminate_detects_contradictions():
    with pytest.raises(Infeasible):
        eliminate([IntForm({2: 1}, -3), IntForm({2: -1}, 1)], 2, cap=10)


def test_eliminate_respects_the_cap():
    positive = [IntForm({2: 1, 4: k}, 0) for k in range(1, 4)]
    negative = [IntForm({2: -1, 5: k}, 10) for k in range(1, 4)]
    assert eliminate(positive + negative, 2, cap=8) is None
    # (2,2) and (3,3) reduce to the same direction as (1,1)
    assert len(eliminate(positive + negative, 2, cap=9)) == 7


def test_projections_stop_at_the_cap():
    forms = [IntForm({2: 1, 4: 1}, -1), IntForm({2: -1}, 0), IntForm({4: -1}, 5)]
    levels = projections(forms, [2, 4], cap=10)
    assert len(levels) == 3
    assert levels[-1] == []
    assert len(projections(forms, [2, 4], cap=1)) == 1


def test_int_form_value():
    form = IntForm({2: 1, 4: -2}, 3)
    assert form.value({2: 4, 4: 1}) == 5
    assert "1*t2" in repr(form)
