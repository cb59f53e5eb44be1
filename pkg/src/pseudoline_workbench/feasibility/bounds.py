"""
Closed-form finiteness bounds.

Each bound has the shape n <= floor(r), where r is the largest root of a
quadratic a n^2 + b n + c that the theorem forces to be <= 0. Roots are
sympy surds, so the floors are exact.
"""

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

import sympy  # type: ignore

from pseudoline_workbench.common.errors import ParameterRangeError, WorkbenchInputError
from pseudoline_workbench.common.exact import Rational, format_fraction, to_fraction
from pseudoline_workbench.feasibility.models import FeasibilityQuery, StatedBound

GROWTH_NOTE = "stated, derivation unverified"

# name -> (statement, (a, b, c))
_STATED: Dict[str, Tuple[str, Tuple[int, int, int]]] = {
    "no-simp-a-m3": ("non-simplicial, splits, m(A) = 3", (1, -10, 21)),
    "no-simp-a-m4": ("non-simplicial, splits, m(A) = 4", (1, -22, 57)),
    "no-simp-b": ("splits, m(A) <= 5, external bounds assumed", (1, -190, 801)),
    "max-mult-4": ("simplicial, splits, m(A) <= 4", (1, -22, 89)),
    "max-mult-5": ("simplicial, splits, m(A) <= 5", (1, -46, 225)),
    "max-mult-5-ratio": ("simplicial, splits, m(A) <= 5, t2 <= 13/16 t3", (39, -1254, 4815)),
}

EPSILON_LIMIT = 254016


def _sympy_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def largest_root(a: Rational, b: Rational, c: Rational) -> sympy.Expr:
    """
    Largest real root of a n^2 + b n + c as an exact surd.

    Raises:
        ParameterRangeError: a <= 0 or the quadratic has no real root
    """
    qa, qb, qc = (_sympy_rational(Fraction(x)) for x in (a, b, c))
    if qa <= 0:
        raise ParameterRangeError(f"leading coefficient must be positive, got {qa}")
    discriminant = qb**2 - 4 * qa * qc
    if discriminant < 0:
        raise ParameterRangeError(f"quadratic {qa}n^2 + {qb}n + {qc} has no real root")
    return sympy.radsimp((-qb + sympy.sqrt(discriminant)) / (2 * qa))


def _bound(name: str, statement: str, coefficients: Tuple[Rational, ...], note: Optional[str] = None) -> StatedBound:
    a, b, c = (Fraction(x) for x in coefficients)
    root = largest_root(a, b, c)
    return StatedBound(
        name=name,
        statement=statement,
        coefficients=(a, b, c),
        root=sympy.sstr(root),
        bound=int(sympy.floor(root)),
        note=note,
    )


def stated_bound_names() -> List[str]:
    return list(_STATED)


def stated_bound(name: str) -> StatedBound:
    """
    One of the closed-form finiteness bounds.

    Args:
        name: no-simp-a-m3, no-simp-a-m4, no-simp-b, max-mult-4, max-mult-5
            or max-mult-5-ratio

    Returns:
        StatedBound with the exact root and its floor

    Raises:
        WorkbenchInputError: unknown name

    Example:
        >>> stated_bound("max-mult-4").bound
        16
    """
    try:
        statement, coefficients = _STATED[name]
    except KeyError:
        raise WorkbenchInputError(f"unknown stated bound {name!r}; known: {', '.join(_STATED)}") from None
    return _bound(name, statement, coefficients)


def stated_bound_for(q: FeasibilityQuery) -> Optional[StatedBound]:
    """The closed-form bound a scan profile is meant to reproduce, if there is one."""
    simplicial_profile = q.require_simplicial and q.require_splits and q.require_four_t2_le_f2
    name: Optional[str] = None
    if simplicial_profile and q.max_mult == 4:
        name = "max-mult-4"
    elif simplicial_profile and q.max_mult == 5:
        name = "max-mult-5-ratio" if q.t2_t3_ratio == Fraction(13, 16) else "max-mult-5"
    elif q.require_splits and not q.require_simplicial:
        if q.max_mult == 5 and q.include_external:
            name = "no-simp-b"
        elif q.max_mult in (3, 4):
            name = f"no-simp-a-m{q.max_mult}"
    return None if name is None else stated_bound(name)


def epsilon_max() -> sympy.Expr:
    """Largest admissible epsilon, (72/11)(6 sqrt(15) - 1)."""
    return sympy.Rational(72, 11) * (6 * sympy.sqrt(15) - 1)


def epsilon_ratio(eps: Rational) -> Fraction:
    """The t2/t3 ratio 24/(16 + eps) the epsilon bound assumes."""
    return Fraction(24) / (16 + Fraction(eps))


def epsilon_bound(eps) -> StatedBound:
    """
    Bound on n for simplicial, splitting arrangements with m(A) <= 6 and
    t2 <= 24/(16+eps) t3.

    The bound is (1008 + 5 eps + 2 sqrt(254016 - 144 eps - 11 eps^2)) / eps.

    Args:
        eps: Positive rational (int, "p/q" string or Fraction)

    Raises:
        ParameterRangeError: eps <= 0 or eps > (72/11)(6 sqrt(15) - 1)

    Example:
        >>> epsilon_bound(8).bound
        256
    """
    eps = to_fraction(eps, name="eps")
    if eps <= 0:
        raise ParameterRangeError(f"eps must be positive, got {format_fraction(eps)}")
    if 11 * eps * eps + 144 * eps > EPSILON_LIMIT:
        raise ParameterRangeError(f"eps = {format_fraction(eps)} exceeds (72/11)(6 sqrt(15) - 1)")
    coefficients = (eps, -(2016 + 10 * eps), 10656 + 69 * eps)
    statement = f"simplicial, splits, m(A) <= 6, t2 <= {format_fraction(epsilon_ratio(eps))} t3"
    return _bound(f"epsilon={format_fraction(eps)}", statement, coefficients)


def growth_remark_bound(alphas: Mapping[int, Rational]) -> StatedBound:
    """
    The bound 95 + 2 sqrt(2056 + 63 sum_i Delta_i alpha_i), Delta_i = (i^2-3i-10)/2.

    The alphas weight the vertices of weight i >= 6 that the remark allows
    beyond multiplicity five. The value is reproduced as stated.

    Raises:
        ParameterRangeError: a weight below 6 or a negative alpha
    """
    total = Fraction(0)
    for weight, alpha in sorted(alphas.items()):
        alpha = to_fraction(alpha, name=f"alpha_{weight}")
        if weight < 6:
            raise ParameterRangeError(f"growth remark weights start at 6, got {weight}")
        if alpha < 0:
            raise ParameterRangeError(f"alpha_{weight} must be non-negative")
        total += Fraction(weight * weight - 3 * weight - 10, 2) * alpha
    radicand = 2056 + 63 * total
    # (n - 95)^2 <= 4 * radicand
    coefficients = (1, -190, 9025 - 4 * radicand)
    terms = ", ".join(f"alpha_{w}={format_fraction(to_fraction(a))}" for w, a in sorted(alphas.items())) or "no alphas"
    return _bound("growth-remark", f"splits, {terms}", coefficients, note=GROWTH_NOTE)


def all_stated_bounds() -> List[StatedBound]:
    return [stated_bound(name) for name in _STATED]
