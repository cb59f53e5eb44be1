"""
Data models for pseudoline arrangements.

An arrangement is stored either as an incidence structure (which lines meet
in which vertex) or as a wiring diagram (a sequence of block reversals of
wires). Only the wiring diagram carries enough information to extract
chambers. Rational lines are the linear fixtures' input form.
"""

from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from pseudoline_workbench.common.errors import InconsistentTVectorError, WorkbenchInputError
from pseudoline_workbench.common.exact import format_fraction, pairs, to_fraction
from pseudoline_workbench.common.models import ExactModel


class Arrangement(BaseModel):
    """Incidence form: n lines and the vertices, each a sorted tuple of line ids."""
    model_config = ConfigDict(frozen=True)

    n: int
    vertices: List[Tuple[int, ...]] = Field(default_factory=list)

    @field_validator("vertices")
    @classmethod
    def _sort_vertex_ids(cls, vertices: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
        return [tuple(sorted(vertex)) for vertex in vertices]

    def weights(self) -> List[int]:
        """Number of lines through each vertex, in vertex order."""
        return [len(vertex) for vertex in self.vertices]

    def canonical(self) -> "Arrangement":
        """Same arrangement with vertices sorted lexicographically."""
        return Arrangement(n=self.n, vertices=sorted(self.vertices))


class TVector(BaseModel):
    """
    Vertex counts by weight: counts[i] = t_i, the number of vertices on
    exactly i lines. Zero counts are not stored; n is remembered.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    counts: Dict[int, int] = Field(default_factory=dict)

    @field_validator("counts")
    @classmethod
    def _drop_zero_counts(cls, counts: Dict[int, int]) -> Dict[int, int]:
        for weight, count in counts.items():
            if weight < 2:
                raise ValueError(f"weights start at 2, got t_{weight}")
            if count < 0:
                raise ValueError(f"t_{weight} must be non-negative, got {count}")
        return {weight: counts[weight] for weight in sorted(counts) if counts[weight] != 0}

    @model_validator(mode="after")
    def _weights_within_n(self) -> "TVector":
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.counts and max(self.counts) > self.n:
            raise ValueError(f"t_{max(self.counts)} exceeds the line count n={self.n}")
        return self

    @classmethod
    def from_sequence(cls, n: int, values: Sequence[int]) -> "TVector":
        """
        Build from the display form (t2, t3, ...).

        Example:
            >>> TVector.from_sequence(13, [12, 4, 9]).t(4)
            9
        """
        return cls(n=n, counts={weight: value for weight, value in enumerate(values, start=2)})

    def t(self, weight: int) -> int:
        """t_weight (zero when absent)."""
        return self.counts.get(weight, 0)

    @property
    def multiplicity(self) -> int:
        """m(A): the largest weight that occurs (0 for an empty vector)."""
        return max(self.counts) if self.counts else 0

    def as_tuple(self) -> Tuple[int, ...]:
        """(t2, ..., t_m) with inner zeros kept and trailing zeros omitted."""
        return tuple(self.t(weight) for weight in range(2, self.multiplicity + 1))

    def pair_count(self) -> int:
        """Sum of C(i,2) t_i."""
        return sum(pairs(weight) * count for weight, count in self.counts.items())

    def is_consistent(self) -> bool:
        """Every pair of lines is counted exactly once."""
        return self.pair_count() == pairs(self.n)

    def require_consistent(self) -> "TVector":
        """Raise InconsistentTVectorError unless the pair count identity holds."""
        if not self.is_consistent():
            raise InconsistentTVectorError(
                f"t={self} on n={self.n} counts {self.pair_count()} line pairs, expected C({self.n},2)={pairs(self.n)}"
            )
        return self

    def __str__(self) -> str:
        return "(" + ",".join(str(value) for value in self.as_tuple()) + ")"


class FVector(BaseModel):
    """Vertex, edge and chamber counts of the cell decomposition."""
    model_config = ConfigDict(frozen=True)

    f0: int
    f1: int
    f2: int

    def euler_characteristic(self) -> int:
        return self.f0 - self.f1 + self.f2

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.f0, self.f1, self.f2)

    def __str__(self) -> str:
        return f"({self.f0},{self.f1},{self.f2})"


class WiringDiagram(BaseModel):
    """
    Wires 0..n-1 start at positions 0..n-1. Each move (a, b) reverses the
    block of positions a..b at once, creating one vertex on all wires of the
    block.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    moves: List[Tuple[int, int]] = Field(default_factory=list)

    def block_sizes(self) -> List[int]:
        return [b - a + 1 for a, b in self.moves]


class RationalLine(ExactModel):
    """
    The projective line a*x + b*y + c*z = 0 with exact coefficients,
    normalised so the first nonzero coefficient is 1. (0, 0, 1) is the line
    at infinity. Proportional inputs give equal models.
    """
    a: Fraction
    b: Fraction
    c: Fraction

    @model_validator(mode="before")
    @classmethod
    def _normalise(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        coefficients = [to_fraction(data.get(key, 0), name=key) for key in ("a", "b", "c")]
        pivot = next((value for value in coefficients if value != 0), None)
        if pivot is None:
            raise WorkbenchInputError("a line needs a nonzero coefficient")
        a, b, c = (value / pivot for value in coefficients)
        return {"a": a, "b": b, "c": c}

    @classmethod
    def of(cls, a: Any, b: Any, c: Any) -> "RationalLine":
        """Shorthand constructor accepting ints, Fractions or "p/q" strings."""
        return cls(a=a, b=b, c=c)

    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def is_at_infinity(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return " ".join(format_fraction(value) for value in self.coefficients())


class Chamber(BaseModel):
    """A projective chamber: bounding lines and bounding vertices (vertex ids are move indices)."""
    model_config = ConfigDict(frozen=True)

    id: int
    lines: Tuple[int, ...]
    vertices: Tuple[int, ...]
    cells: int = 1

    def line_count(self) -> int:
        return len(self.lines)

    def is_triangle(self) -> bool:
        return len(self.lines) == 3


class LineSweep(BaseModel):
    """A wiring diagram realising a line arrangement; wire i is line wire_lines[i]."""
    model_config = ConfigDict(frozen=True)

    wiring: WiringDiagram
    wire_lines: List[int]
