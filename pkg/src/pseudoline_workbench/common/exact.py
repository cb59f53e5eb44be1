"""
Exact arithmetic helpers.

All quantities in the workbench are integers or Fractions. These helpers
convert user input strictly (floats are refused), round Fractions exactly
and render them as decimal strings for reports and records.
"""

from fractions import Fraction
from math import comb, isqrt
from typing import Any, Optional, Union

from pseudoline_workbench.common.errors import WorkbenchInputError

Rational = Union[int, Fraction]


def to_fraction(value: Any, name: str = "value") -> Fraction:
    """
    Convert a rational-like input to a Fraction, rejecting floats.

    Args:
        value: int, Fraction or a string such as "3", "-1/2"
        name: Label used in the error message

    Returns:
        The exact Fraction

    Example:
        >>> to_fraction("-3/4")
        Fraction(-3, 4)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise WorkbenchInputError(f"{name} must be exact (int, p/q string or Fraction), got float {value!r}")
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise WorkbenchInputError(f"{name} is not an exact rational: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise WorkbenchInputError(f"{name} is not an exact rational: {value!r}") from e
    raise WorkbenchInputError(f"{name} has unsupported type {type(value).__name__}")


def fraction_floor(x: Rational) -> int:
    """floor(x) with exact integer arithmetic."""
    x = Fraction(x)
    return int(x.numerator // x.denominator)


def fraction_ceil(x: Rational) -> int:
    """ceil(x) with exact integer arithmetic."""
    return -fraction_floor(-Fraction(x))


def format_fraction(x: Rational) -> str:
    """Render as "p" or "p/q"."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def pairs(k: int) -> int:
    """Number of unordered pairs among k items, C(k, 2)."""
    return comb(k, 2)


def integer_sqrt_exact(value: int) -> Optional[int]:
    """Return the integer square root if value is a perfect square, else None."""
    if value < 0:
        return None
    root = isqrt(value)
    return root if root * root == value else None
