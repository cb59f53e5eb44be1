"""
Affine expressions in the t-vector for a fixed line count.

The catalogue writes each linear statement once with these expressions; the
same objects are evaluated on a t-vector and turned into LinearForms for the
feasibility enumerator, so the checked statement and the pruned statement
cannot drift apart.
"""

from fractions import Fraction
from typing import Dict, Union

from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.exact import pairs
from pseudoline_workbench.inequalities.models import LinearForm

Scalar = Union[int, Fraction]


class Linear:
    """constant + sum(coefficients[w] * t_w) with exact coefficients."""

    __slots__ = ("constant", "coefficients")

    def __init__(self, constant: Scalar = 0, coefficients: Union[Dict[int, Fraction], None] = None):
        self.constant = Fraction(constant)
        self.coefficients: Dict[int, Fraction] = {
            w: Fraction(a) for w, a in (coefficients or {}).items() if a != 0
        }

    @staticmethod
    def _lift(other: Union["Linear", Scalar]) -> "Linear":
        return other if isinstance(other, Linear) else Linear(other)

    def __add__(self, other: Union["Linear", Scalar]) -> "Linear":
        other = self._lift(other)
        merged = dict(self.coefficients)
        for w, a in other.coefficients.items():
            merged[w] = merged.get(w, Fraction(0)) + a
        return Linear(self.constant + other.constant, merged)

    __radd__ = __add__

    def __neg__(self) -> "Linear":
        return Linear(-self.constant, {w: -a for w, a in self.coefficients.items()})

    def __sub__(self, other: Union["Linear", Scalar]) -> "Linear":
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> "Linear":
        return Linear(other) - self

    def __mul__(self, k: Scalar) -> "Linear":
        k = Fraction(k)
        return Linear(self.constant * k, {w: a * k for w, a in self.coefficients.items()})

    __rmul__ = __mul__

    def __truediv__(self, k: Scalar) -> "Linear":
        return self * (1 / Fraction(k))

    def at(self, t: TVector) -> Fraction:
        return self.constant + sum((a * t.t(w) for w, a in self.coefficients.items()), Fraction(0))

    def nonnegative(self, strict: bool = False) -> LinearForm:
        """The form self >= 0 (self > 0 when strict)."""
        return LinearForm(coefficients=dict(self.coefficients), constant=self.constant, strict=strict)

    def __repr__(self) -> str:
        return f"Linear({self.constant}, {self.coefficients})"


def tw(weight: int) -> Linear:
    """The variable t_weight."""
    return Linear(0, {weight: Fraction(1)})


def weighted_sum(m: int, coefficient, start: int = 2) -> Linear:
    """sum_{start <= i <= m} coefficient(i) * t_i."""
    return Linear(0, {i: Fraction(coefficient(i)) for i in range(start, m + 1)})


def f0(m: int) -> Linear:
    return weighted_sum(m, lambda i: 1)


def f1(m: int) -> Linear:
    return weighted_sum(m, lambda i: i)


def f2(m: int) -> Linear:
    return 1 + weighted_sum(m, lambda i: i - 1)


def pair_sum(m: int) -> Linear:
    return weighted_sum(m, pairs)
