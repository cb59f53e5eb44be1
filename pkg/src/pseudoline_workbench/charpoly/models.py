"""
Characteristic polynomial and root models.

chi(t) = t^3 - n t^2 + (f2 - 1) t + (n - f2). One root is always 1; the
other two are (n - 1 +/- sqrt(m)) / 2 with m = (n + 1)^2 - 4 f2.
"""

from fractions import Fraction
from typing import Optional, Tuple, Union

import sympy  # type: ignore
from pydantic import BaseModel, ConfigDict, model_validator

from pseudoline_workbench.common.exact import integer_sqrt_exact

T = sympy.Symbol("t")


class CharPoly(BaseModel):
    """The cubic chi(A, t) of a rank 3 arrangement, stored with exact integer coefficients."""
    model_config = ConfigDict(frozen=True)

    n: int
    f2: int
    coefficients: Tuple[int, int, int, int]
    discriminant: int

    @model_validator(mode="before")
    @classmethod
    def _derive(cls, data):
        if isinstance(data, dict) and "n" in data and "f2" in data:
            n, f2 = data["n"], data["f2"]
            data = dict(data)
            data.setdefault("coefficients", (1, -n, f2 - 1, n - f2))
            data.setdefault("discriminant", (n + 1) ** 2 - 4 * f2)
        return data

    @model_validator(mode="after")
    def _coefficients_match(self) -> "CharPoly":
        n, f2 = self.n, self.f2
        if tuple(self.coefficients) != (1, -n, f2 - 1, n - f2):
            raise ValueError(f"coefficients {self.coefficients} do not match n={n}, f2={f2}")
        if self.discriminant != (n + 1) ** 2 - 4 * f2:
            raise ValueError(f"discriminant {self.discriminant} does not match n={n}, f2={f2}")
        return self

    def evaluate(self, t: Union[int, Fraction]) -> Fraction:
        """chi(t) exactly."""
        t = Fraction(t)
        a3, a2, a1, a0 = self.coefficients
        return ((a3 * t + a2) * t + a1) * t + a0

    def as_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(self.coefficients), T)

    def __str__(self) -> str:
        return describe_polynomial(self)


class QuadraticSurd(BaseModel):
    """(base + sign * sqrt(radicand)) / denominator."""
    model_config = ConfigDict(frozen=True)

    base: int
    sign: int
    radicand: int
    denominator: int

    def is_rational(self) -> bool:
        return integer_sqrt_exact(self.radicand) is not None

    def rational_value(self) -> Optional[Fraction]:
        root = integer_sqrt_exact(self.radicand)
        if root is None:
            return None
        return Fraction(self.base + self.sign * root, self.denominator)

    def to_sympy(self):
        return (sympy.Integer(self.base) + self.sign * sympy.sqrt(sympy.Integer(self.radicand))) / self.denominator


class RootAnalysis(BaseModel):
    """Roots of chi: 1 and the surd pair (n - 1 -/+ sqrt(m)) / 2."""
    model_config = ConfigDict(frozen=True)

    n: int
    f2: int
    m: int
    splits: bool
    integral: bool
    roots: Tuple[QuadraticSurd, QuadraticSurd]
    integral_roots: Optional[Tuple[int, int, int]] = None

    def sympy_roots(self) -> list:
        """[1, r_minus, r_plus] as exact sympy numbers."""
        return [sympy.Integer(1)] + [root.to_sympy() for root in self.roots]

    def root_set(self) -> Tuple[int, ...]:
        """Sorted distinct integral roots (empty when not integral)."""
        if self.integral_roots is None:
            return ()
        return tuple(sorted(set(self.integral_roots)))

    def __str__(self) -> str:
        return describe_roots(self)


def _term(coefficient: int, power: int) -> str:
    magnitude = abs(coefficient)
    if power == 0:
        return str(magnitude)
    variable = "t" if power == 1 else f"t^{power}"
    return variable if magnitude == 1 else f"{magnitude}{variable}"


def describe_polynomial(p: CharPoly) -> str:
    """
    Stable text form of the cubic.

    Example:
        >>> describe_polynomial(CharPoly(n=13, f2=48))
        't^3 - 13t^2 + 47t - 35'
    """
    text = ""
    for power, coefficient in zip((3, 2, 1, 0), p.coefficients):
        if coefficient == 0:
            continue
        term = _term(coefficient, power)
        if not text:
            text = term if coefficient > 0 else f"-{term}"
        else:
            text += f" + {term}" if coefficient > 0 else f" - {term}"
    return text or "0"


def describe_roots(analysis: RootAnalysis) -> str:
    """
    "(t-1)(t-a)(t-b)" when the roots are integers, otherwise
    "roots: 1, (n-1±√m)/2" with the numbers filled in.
    """
    if analysis.integral_roots is not None:
        return "".join(_linear_factor(root) for root in sorted(analysis.integral_roots))
    radicand = str(analysis.m) if analysis.m >= 0 else f"({analysis.m})"
    return f"roots: 1, ({analysis.n - 1}±√{radicand})/2"


def _linear_factor(root: int) -> str:
    if root < 0:
        return f"(t+{-root})"
    if root == 0:
        return "t"
    return f"(t-{root})"
