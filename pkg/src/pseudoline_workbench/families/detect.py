"""
Recognise named arrangements and family members from (n, t).

All families handled here are determined by their t-vectors, so detection
is a comparison against the generating formulas.
"""

from typing import List

from opentelemetry import trace

from pseudoline_workbench.arrangement.incidence import is_near_pencil
from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.errors import WorkbenchInputError
from pseudoline_workbench.families.generate import (
    A132_VECTOR,
    COXETER_VECTORS,
    KELLY_MOSER_VECTOR,
    r1_vector,
    r2_vector,
)
from pseudoline_workbench.families.models import Family, FamilyTag

tracer = trace.get_tracer("pseudoline_workbench.families")


def detect_family(n: int, t: TVector) -> List[FamilyTag]:
    """
    Every tag whose t-vector equals t.

    A(6,1) is both Coxeter(A61) and R1(3); A(9,1) is both Coxeter(A91) and
    R2(9). An unmatched vector gives [Unrecognized].

    Args:
        n: Line count (must equal t.n)
        t: The t-vector

    Returns:
        Tags sorted by their text form

    Example:
        >>> [str(tag) for tag in detect_family(9, TVector.from_sequence(9, [6, 4, 3]))]
        ['Coxeter(A91)', 'R2(9)']
    """
    if t.n != n:
        raise WorkbenchInputError(f"t-vector is for n={t.n}, detected against n={n}")

    with tracer.start_as_current_span("detect_family") as span:
        span.set_attribute("n", n)
        span.set_attribute("t", str(t))

        tags = []
        if is_near_pencil(t):
            tags.append(FamilyTag.of(Family.NEAR_PENCIL, n))
        if n % 2 == 0 and n >= 6 and t == r1_vector(n // 2):
            tags.append(FamilyTag.of(Family.R1, n // 2))
        if n % 4 == 1 and n >= 9 and t == r2_vector((n - 1) // 4):
            tags.append(FamilyTag.of(Family.R2, n))
        for name, vector in COXETER_VECTORS.items():
            if t == vector:
                tags.append(FamilyTag.of(Family.COXETER, name))
        if t == A132_VECTOR:
            tags.append(FamilyTag.of(Family.A132))
        if t == KELLY_MOSER_VECTOR:
            tags.append(FamilyTag.of(Family.KELLY_MOSER))

        if not tags:
            tags.append(FamilyTag.of(Family.UNRECOGNIZED))
        tags.sort(key=str)
        span.set_attribute("tags", ",".join(str(tag) for tag in tags))
        return tags


def is_recognized(tags: List[FamilyTag]) -> bool:
    return any(tag.family is not Family.UNRECOGNIZED for tag in tags)
