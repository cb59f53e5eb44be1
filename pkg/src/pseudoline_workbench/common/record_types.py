"""Record types for the machine-readable output stream.

Every numeric field that can be rational is a decimal string ("-3/2"), so the
records survive JSON without ever passing through a float.
"""
from typing import List, Optional, TypedDict


class CertificateRecord(TypedDict):
    """One constraint evaluation."""
    kind: str
    constraint: str
    citation: str
    label: str
    n: int
    t: List[int]
    verdict: str
    slack: Optional[str]
    slack_numerator: Optional[str]
    slack_denominator: Optional[str]
    reason: Optional[str]


class TVectorRecord(TypedDict):
    """One feasible t-vector from an enumeration."""
    kind: str
    n: int
    t: List[int]
    f2: int


class ScanRecord(TypedDict):
    """Per-n line of a scan profile."""
    kind: str
    n: int
    feasible: int
    nodes: int
    pruned: int


class InvariantRecord(TypedDict):
    """Invariants of one input arrangement."""
    kind: str
    n: int
    t: List[int]
    f: List[int]
    coefficients: List[str]
    discriminant: str
    splits: bool
    simplicial: bool
    near_pencil: bool
    multiplicity: int
    families: List[str]


class ChamberRecord(TypedDict):
    """One projective chamber."""
    kind: str
    chamber: int
    lines: List[int]
    vertices: List[int]
    double_points: int


class RatioRecord(TypedDict):
    """t6/n^2 for one vector of a ratio report."""
    kind: str
    n: int
    t6: int
    ratio: str
    lower: str
    upper: str
    within: bool


class ValidationRecord(TypedDict):
    """Outcome of validating one input."""
    kind: str
    subject: str
    n: int
    valid: bool
    issues: List[str]


class FamilyRecord(TypedDict):
    """Family tags of one t-vector."""
    kind: str
    n: int
    t: List[int]
    tags: List[str]


class CoxeterRecord(TypedDict):
    """Chamber-graph test of a wiring or one solution of the Coxeter system."""
    kind: str
    x: Optional[int]
    uniform: bool
    n: Optional[int]
    t: Optional[List[int]]
    reason: Optional[str]


class BoundRecord(TypedDict):
    """A closed-form bound n <= floor(root)."""
    kind: str
    name: str
    statement: str
    root: str
    bound: int
    note: Optional[str]


class ProbeRecord(TypedDict):
    """Dirac-Motzkin probe for one n."""
    kind: str
    n: int
    below: List[List[int]]
    at: List[List[int]]
    consistent: bool
