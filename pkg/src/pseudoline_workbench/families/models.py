"""
Data models for named arrangements, chamber graphs and the Coxeter test.
"""

from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx  # type: ignore
from pydantic import BaseModel, ConfigDict, Field

from pseudoline_workbench.arrangement.models import LineSweep, RationalLine, TVector
from pseudoline_workbench.common.exact import format_fraction
from pseudoline_workbench.common.models import ExactModel


class Family(str, Enum):
    NEAR_PENCIL = "NearPencil"
    R1 = "R1"
    R2 = "R2"
    COXETER = "Coxeter"
    A132 = "A132"
    KELLY_MOSER = "KellyMoser"
    UNRECOGNIZED = "Unrecognized"


class FamilyTag(BaseModel):
    """
    A named arrangement or a member of an infinite family.

    parameter is the line count for NearPencil and R2, m for R1 and the
    Coxeter name (A61, A91, A151) for Coxeter; the sporadic tags carry none.
    """
    model_config = ConfigDict(frozen=True)

    family: Family
    parameter: Optional[str] = None

    @classmethod
    def of(cls, family: Family, parameter=None) -> "FamilyTag":
        return cls(family=family, parameter=None if parameter is None else str(parameter))

    def __str__(self) -> str:
        if self.parameter is None:
            return self.family.value
        return f"{self.family.value}({self.parameter})"


class GeneratedFamily(BaseModel):
    """Output of generate(): the t-vector and, where known, a concrete realisation."""
    model_config = ConfigDict(frozen=True)

    tag: FamilyTag
    n: int
    t: TVector
    lines: Optional[List[RationalLine]] = None
    sweep: Optional[LineSweep] = None

    def has_realisation(self) -> bool:
        return self.lines is not None


class ChamberGraph(BaseModel):
    """
    Gamma^C: the bounding lines of a chamber, with an edge between two of
    them when they meet in a vertex of weight >= 3 (edge weight = that weight).
    """
    model_config = ConfigDict(frozen=True)

    chamber_id: int
    lines: Tuple[int, ...]
    edges: List[Tuple[int, int, int]] = Field(default_factory=list)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.lines)
        for u, v, weight in self.edges:
            graph.add_edge(u, v, weight=weight)
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def edge_weights(self) -> Tuple[int, ...]:
        return tuple(sorted(weight for _, _, weight in self.edges))

    def describe(self) -> str:
        edges = " ".join(f"{u}-{v}:{weight}" for u, v, weight in self.edges) or "no edges"
        return f"lines {','.join(str(i) for i in self.lines)}; {edges}"


class CoxeterResult(BaseModel):
    """
    Outcome of the chamber-graph characterisation.

    isomorphic: all Gamma^C are pairwise isomorphic (weights respected).
    connected: they are connected. Only both together identify a spherical
    Coxeter arrangement; x is then the second edge weight of the path.
    """
    model_config = ConfigDict(frozen=True)

    chambers: int
    classes: int
    isomorphic: bool
    connected: bool
    x: Optional[int] = None
    tag: Optional[FamilyTag] = None
    graph: Optional[ChamberGraph] = None
    reason: Optional[str] = None

    def is_uniform(self) -> bool:
        return self.isomorphic and self.connected


class CoxSolution(ExactModel):
    """Exact solution of the Coxeter linear system for one x."""
    x: int
    feasible: bool
    singular: bool = False
    t2: Optional[Fraction] = None
    t3: Optional[Fraction] = None
    tx: Optional[Fraction] = None
    pair_total: Optional[Fraction] = None
    n: Optional[int] = None
    t: Optional[TVector] = None
    reason: Optional[str] = None

    def describe(self) -> str:
        if self.feasible and self.t is not None:
            return f"x={self.x}: n={self.n}, t={self.t}"
        if self.singular:
            return f"x={self.x}: singular system, infeasible"
        values = ", ".join(
            f"{name}={format_fraction(value)}"
            for name, value in (("t2", self.t2), ("t3", self.t3), ("tx", self.tx), ("C(n,2)", self.pair_total))
            if value is not None
        )
        return f"x={self.x}: infeasible ({self.reason}; {values})"


class ChamberAudit(BaseModel):
    """Double points per chamber of a simplicial, nontrivial arrangement."""
    model_config = ConfigDict(frozen=True)

    n: int
    t: TVector
    applicable: bool
    reason: Optional[str] = None
    double_points: List[int] = Field(default_factory=list)

    def chambers(self) -> int:
        return len(self.double_points)

    def max_per_chamber(self) -> int:
        return max(self.double_points, default=0)

    def every_chamber_has_one(self) -> bool:
        return self.applicable and bool(self.double_points) and all(count == 1 for count in self.double_points)

    def is_passing(self) -> bool:
        """At most one double point in every chamber (vacuous when not applicable)."""
        return self.max_per_chamber() <= 1
