"""Per-chamber double point audit."""

from opentelemetry import trace

from pseudoline_workbench.arrangement.chambers import chambers
from pseudoline_workbench.arrangement.incidence import is_simplicial, is_trivial, t_vector
from pseudoline_workbench.arrangement.models import WiringDiagram
from pseudoline_workbench.arrangement.wiring import wiring_to_arrangement
from pseudoline_workbench.families.models import ChamberAudit

tracer = trace.get_tracer("pseudoline_workbench.families")


def double_point_chamber_audit(w: WiringDiagram) -> ChamberAudit:
    """
    Count the double points in the closure of every chamber.

    In a simplicial arrangement that is not a near pencil no chamber holds
    two double points, and every chamber holds one exactly when 4 t2 = f2.

    Args:
        w: A valid wiring diagram

    Returns:
        ChamberAudit; not applicable for trivial or non-simplicial input
    """
    with tracer.start_as_current_span("double_point_chamber_audit") as span:
        t = t_vector(wiring_to_arrangement(w))
        span.set_attribute("n", w.n)
        span.set_attribute("t", str(t))
        if is_trivial(t):
            return ChamberAudit(n=w.n, t=t, applicable=False, reason="trivial arrangement (near pencil or triangle)")
        if not is_simplicial(t):
            return ChamberAudit(n=w.n, t=t, applicable=False, reason="not simplicial")

        sizes = w.block_sizes()
        counts = [sum(1 for v in chamber.vertices if sizes[v] == 2) for chamber in chambers(w)]
        audit = ChamberAudit(n=w.n, t=t, applicable=True, double_points=counts)
        span.set_attribute("max_per_chamber", audit.max_per_chamber())
        return audit
