"""
Integer linear forms over the free counts of one enumeration run.

A run fixes the multiplicity m. Its free variables are t2 and t4..t_m; t3 is
eliminated through the pair count identity

    t3 = (C(n,2) - t2 - sum_{4<=k<=m} C(k,2) t_k) / 3

and every t_k with k > m is zero. Catalogue forms are rewritten in the free
variables and scaled to primitive integer inequalities sum a_v x_v + c >= 0.
Rounding the constant down after dividing by the gcd keeps every integer
solution, so the forms stay valid for the enumeration.

Fourier-Motzkin elimination projects the system onto prefixes of the
branching order, which gives exact real bounds for each branching variable
given the ones already fixed.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pseudoline_workbench.common.exact import pairs
from pseudoline_workbench.inequalities.models import LinearForm

Key = Tuple[Tuple[int, int], ...]


class Infeasible(Exception):
    """A form reduced to a false constant inequality."""


class IntForm:
    """sum coefficients[v] * t_v + constant >= 0 with coprime integer coefficients."""

    __slots__ = ("coefficients", "constant", "key")

    def __init__(self, coefficients: Dict[int, int], constant: int):
        self.coefficients = coefficients
        self.constant = constant
        self.key: Key = tuple(sorted(coefficients.items()))

    def value(self, values: Dict[int, int]) -> int:
        return self.constant + sum(a * values.get(v, 0) for v, a in self.coefficients.items())

    def __repr__(self) -> str:
        terms = " + ".join(f"{a}*t{v}" for v, a in self.key)
        return f"IntForm({terms} + {self.constant} >= 0)"


def normalise(coefficients: Dict[int, Fraction], constant: Fraction, strict: bool = False) -> Optional[IntForm]:
    """
    Scale to primitive integers.

    Returns:
        The IntForm, or None for a true constant inequality

    Raises:
        Infeasible: the form is a false constant inequality
    """
    coefficients = {v: Fraction(a) for v, a in coefficients.items() if a != 0}
    constant = Fraction(constant)
    scale = lcm(constant.denominator, *(a.denominator for a in coefficients.values()))
    ints = {v: int(a * scale) for v, a in coefficients.items()}
    c = int(constant * scale)
    if strict:
        c -= 1
    if not ints:
        if c < 0:
            raise Infeasible(f"constant inequality {c} >= 0")
        return None
    g = gcd(*ints.values())
    return IntForm({v: a // g for v, a in ints.items()}, c // g)


def substitute(form: LinearForm, n: int, m: int) -> Optional[IntForm]:
    """
    Rewrite a catalogue form in t2, t4..t_m.

    Raises:
        Infeasible: the form cannot hold for any vector of the run
    """
    coefficients: Dict[int, Fraction] = {}
    constant = form.constant
    for weight, a in form.coefficients.items():
        if weight > m:
            continue
        if weight == 3:
            share = a / 3
            constant += share * pairs(n)
            coefficients[2] = coefficients.get(2, Fraction(0)) - share
            for k in range(4, m + 1):
                coefficients[k] = coefficients.get(k, Fraction(0)) - share * pairs(k)
        else:
            coefficients[weight] = coefficients.get(weight, Fraction(0)) + a
    return normalise(coefficients, constant, form.strict)


def deduplicate(forms: Iterable[IntForm]) -> List[IntForm]:
    """One form per coefficient vector, keeping the smallest (tightest) constant."""
    best: Dict[Key, IntForm] = {}
    for form in forms:
        known = best.get(form.key)
        if known is None or form.constant < known.constant:
            best[form.key] = form
    return list(best.values())


def eliminate(forms: Sequence[IntForm], variable: int, cap: int) -> Optional[List[IntForm]]:
    """
    One Fourier-Motzkin step.

    Returns:
        The projected system, or None when it would exceed cap forms

    Raises:
        Infeasible: a combination is a false constant inequality
    """
    positive = [f for f in forms if f.coefficients.get(variable, 0) > 0]
    negative = [f for f in forms if f.coefficients.get(variable, 0) < 0]
    result = [f for f in forms if variable not in f.coefficients]
    if len(result) + len(positive) * len(negative) > cap:
        return None

    for p in positive:
        a = p.coefficients[variable]
        for q in negative:
            b = -q.coefficients[variable]
            combined: Dict[int, Fraction] = {}
            for v in set(p.coefficients) | set(q.coefficients):
                if v == variable:
                    continue
                combined[v] = Fraction(b * p.coefficients.get(v, 0) + a * q.coefficients.get(v, 0))
            form = normalise(combined, Fraction(b * p.constant + a * q.constant))
            if form is not None:
                result.append(form)
    return deduplicate(result)


def projections(forms: Sequence[IntForm], order: Sequence[int], cap: int) -> List[List[IntForm]]:
    """
    Successive projections eliminating the variables in order.

    The first entry is the (deduplicated) input. Elimination stops early when
    a step would exceed cap forms.

    Raises:
        Infeasible: some projection contains a false constant inequality
    """
    levels = [deduplicate(forms)]
    for variable in order:
        projected = eliminate(levels[-1], variable, cap)
        if projected is None:
            break
        levels.append(projected)
    return levels
