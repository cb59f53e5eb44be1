"""
Closed form of chi(A, t) and exact root analysis.
"""

from opentelemetry import trace

from pseudoline_workbench.arrangement.incidence import f_vector
from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.charpoly.models import CharPoly, QuadraticSurd, RootAnalysis
from pseudoline_workbench.common.errors import ParameterRangeError
from pseudoline_workbench.common.exact import integer_sqrt_exact

tracer = trace.get_tracer("pseudoline_workbench.charpoly")


def charpoly_closed_form(n: int, f2: int) -> CharPoly:
    """
    chi(t) = t^3 - n t^2 + (f2 - 1) t + n - f2 directly from (n, f2).

    Raises:
        ParameterRangeError: n < 3 or f2 < 4
    """
    if n < 3 or f2 < 4:
        raise ParameterRangeError(f"closed form needs n >= 3 and f2 >= 4, got n={n}, f2={f2}")
    return CharPoly(n=n, f2=f2)


def root_analysis(p: CharPoly) -> RootAnalysis:
    """
    Exact roots of chi: 1 and (n - 1 -/+ sqrt(m)) / 2.

    splits is m >= 0; integral means m is a perfect square of the same
    parity as n - 1, so both surds are integers.
    """
    n, m = p.n, p.discriminant
    pair = (
        QuadraticSurd(base=n - 1, sign=-1, radicand=m, denominator=2),
        QuadraticSurd(base=n - 1, sign=1, radicand=m, denominator=2),
    )
    root = integer_sqrt_exact(m)
    integral = root is not None and (n - 1 - root) % 2 == 0
    integral_roots = None
    if integral and root is not None:
        integral_roots = tuple(sorted((1, (n - 1 - root) // 2, (n - 1 + root) // 2)))
    return RootAnalysis(
        n=n,
        f2=p.f2,
        m=m,
        splits=m >= 0,
        integral=integral,
        roots=pair,
        integral_roots=integral_roots,
    )


def splits_over_R(t: TVector) -> bool:
    """
    True iff chi has only real roots, i.e. (n + 1)^2 >= 4 f2.

    Raises:
        InconsistentTVectorError: t violates the pair count identity
    """
    with tracer.start_as_current_span("splits_over_R") as span:
        f2 = f_vector(t).f2
        span.set_attribute("n", t.n)
        span.set_attribute("f2", f2)
        return (t.n + 1) ** 2 - 4 * f2 >= 0


def charpoly_of_tvector(t: TVector) -> CharPoly:
    """chi from the t-vector, with f2 from the chamber count formula."""
    return charpoly_closed_form(t.n, f_vector(t).f2)
