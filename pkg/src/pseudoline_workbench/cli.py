"""
Command-line entry point.

One verb per invocation. Every verb builds a Report; report_emit prints the
human table to stdout and, when a records path is given (--records or
PSEUDOLINE_RECORDS), writes one JSON record per certificate, vector or row.

Exit codes: 0 when the computation is done and every requested check passes,
1 when a check fails, 2 for input and usage errors.
"""

import argparse
import re
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO, Tuple

import sympy  # type: ignore
from pydantic import ValidationError

from pseudoline_workbench.arrangement.chambers import chambers, measured_f_vector
from pseudoline_workbench.arrangement.formats import (
    FORMAT_NAMES,
    LoadedInput,
    format_arrangement,
    format_lines,
    format_sweep,
    format_tvector,
    load_input,
)
from pseudoline_workbench.arrangement.incidence import (
    f_vector,
    is_near_pencil,
    is_simplicial,
    multiplicity,
    validate_arrangement,
)
from pseudoline_workbench.arrangement.lines import lines_to_arrangement, lines_to_wiring
from pseudoline_workbench.arrangement.models import FVector, TVector, WiringDiagram
from pseudoline_workbench.arrangement.wiring import has_double_point_with_triple_neighbours, validate_wiring
from pseudoline_workbench.charpoly.lattice import charpoly_from_lattice
from pseudoline_workbench.charpoly.models import RootAnalysis, describe_polynomial, describe_roots
from pseudoline_workbench.charpoly.roots import charpoly_of_tvector, root_analysis
from pseudoline_workbench.common.config import WorkbenchSettings, load_settings
from pseudoline_workbench.common.errors import WorkbenchInputError
from pseudoline_workbench.common.exact import format_fraction, pairs
from pseudoline_workbench.common.models import ValidationReport
from pseudoline_workbench.common.record_types import (
    BoundRecord,
    ChamberRecord,
    CoxeterRecord,
    FamilyRecord,
    InvariantRecord,
    ProbeRecord,
    RatioRecord,
    ScanRecord,
    TVectorRecord,
    ValidationRecord,
)
from pseudoline_workbench.common.tracing import enable_tracing_for_command
from pseudoline_workbench.families.audit import double_point_chamber_audit
from pseudoline_workbench.families.chamber_graph import chambers_with_few_triple_points, coxeter_test, solve_cox_system
from pseudoline_workbench.families.detect import detect_family
from pseudoline_workbench.families.generate import FAMILY_NAMES, generate
from pseudoline_workbench.feasibility.bounds import all_stated_bounds, epsilon_bound, epsilon_max, growth_remark_bound
from pseudoline_workbench.feasibility.enumerate import enumerate_feasible
from pseudoline_workbench.feasibility.models import CountBound, FeasibilityQuery, StatedBound
from pseudoline_workbench.feasibility.scan import (
    conjecture_ratio_check,
    dirac_motzkin_probe,
    epsilon_cross_check,
    scan_bound,
    sextuple_vectors,
)
from pseudoline_workbench.inequalities.models import ApplicabilityFlags, Verdict
from pseudoline_workbench.inequalities.suites import certificate_record, check_many, run_suite, suite_ids
from pseudoline_workbench.report import Report, report_emit

Command = Callable[[argparse.Namespace, Report, WorkbenchSettings], None]


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _load(args: argparse.Namespace) -> LoadedInput:
    return load_input(args.file, args.format)


def _wiring_with_labels(loaded: LoadedInput) -> Tuple[WiringDiagram, List[int]]:
    """The wiring of the input and, per wire, the input line it carries."""
    if loaded.lines is not None:
        sweep = lines_to_wiring(loaded.lines)
        return sweep.wiring, list(sweep.wire_lines)
    w = loaded.to_wiring()
    return w, list(range(w.n))


def _measured(loaded: LoadedInput) -> Optional[FVector]:
    if loaded.kind in ("wd", "lines"):
        return measured_f_vector(loaded.to_wiring())
    return None


def _roots_line(analysis: RootAnalysis) -> str:
    if analysis.integral_roots is not None:
        return "roots: " + ", ".join(str(root) for root in analysis.integral_roots)
    return describe_roots(analysis)


def _vectors_text(vectors: List[TVector]) -> str:
    return " ".join(str(t) for t in vectors) or "-"


# verbs


def cmd_validate(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    loaded = _load(args)
    if loaded.tvector is not None:
        t = loaded.tvector
        issues = [] if t.is_consistent() else [f"pair count {t.pair_count()} != C(n,2) = {pairs(t.n)}"]
        validation = ValidationReport(subject="t-vector", n=t.n, issues=issues)
    elif loaded.wiring is not None:
        validation = validate_wiring(loaded.wiring)
    else:
        validation = validate_arrangement(loaded.to_arrangement())

    report.summary.append(validation.summary())
    report.table(["issue"], [{"issue": issue} for issue in validation.issues])
    report.record(
        ValidationRecord(
            kind="validation",
            subject=validation.subject,
            n=validation.n,
            valid=validation.is_valid(),
            issues=validation.issues,
        )
    )
    report.failed = not validation.is_valid()


def cmd_invariants(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    loaded = _load(args)
    t = loaded.to_tvector()
    f = f_vector(t)
    p = charpoly_of_tvector(t)
    analysis = root_analysis(p)
    tags = detect_family(t.n, t)

    report.line("n", t.n)
    report.line("t", t)
    report.line("f", f)
    measured = _measured(loaded)
    if measured is not None:
        report.line("f (counted)", measured)
        report.failed = measured != f
    report.line("chi", describe_polynomial(p))
    report.summary.append(_roots_line(analysis))
    report.line("splits", analysis.splits)
    report.line("simplicial", is_simplicial(t))
    report.line("near pencil", is_near_pencil(t))
    report.line("multiplicity", multiplicity(t))
    report.line("families", ", ".join(str(tag) for tag in tags))
    report.record(
        InvariantRecord(
            kind="invariants",
            n=t.n,
            t=list(t.as_tuple()),
            f=list(f.as_tuple()),
            coefficients=[str(c) for c in p.coefficients],
            discriminant=str(p.discriminant),
            splits=analysis.splits,
            simplicial=is_simplicial(t),
            near_pencil=is_near_pencil(t),
            multiplicity=multiplicity(t),
            families=[str(tag) for tag in tags],
        )
    )


def cmd_charpoly(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    loaded = _load(args)
    t = loaded.to_tvector()
    p = charpoly_of_tvector(t)
    analysis = root_analysis(p)
    report.line("chi", describe_polynomial(p))
    report.summary.append(_roots_line(analysis))
    if analysis.integral_roots is not None:
        report.line("factors", describe_roots(analysis))
    report.line("discriminant", p.discriminant)
    report.line("splits", analysis.splits)
    if loaded.has_incidence() and not args.no_lattice:
        lattice = charpoly_from_lattice(loaded.to_arrangement())
        agrees = lattice == p
        report.line("lattice", "agrees" if agrees else f"differs: {describe_polynomial(lattice)}")
        report.failed = not agrees


def cmd_check(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    loaded = _load(args)
    t = loaded.to_tvector()
    flags = ApplicabilityFlags(
        simplicial=True if args.simplicial else None,
        splits=True if args.real_rooted else None,
        assume_external=args.external,
        stretchable=args.stretchable,
    )
    measured = _measured(loaded)
    suites = args.suite or ([] if args.constraint else ["universal"])
    certificates = []
    for suite in suites:
        certificates.extend(run_suite(suite, t.n, t, flags, measured))
    if args.constraint:
        certificates.extend(check_many(args.constraint, t.n, t, flags, measured))

    counts = {verdict: sum(1 for c in certificates if c.verdict is verdict) for verdict in Verdict}
    report.line("n", t.n)
    report.line("t", t)
    report.line("suites", ", ".join(suites) or "-")
    report.summary.append(", ".join(f"{verdict.value}: {count}" for verdict, count in counts.items()))
    rows = [
        {
            "constraint": c.constraint,
            "verdict": c.verdict.value,
            "slack": c.slack_text(),
            "detail": c.binding or c.reason or "",
        }
        for c in certificates
    ]
    report.table(["constraint", "verdict", "slack", "detail"], rows)
    for certificate in certificates:
        report.record(certificate_record(certificate))
    report.failed = counts[Verdict.FAIL] > 0


def cmd_chambers(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    w, labels = _wiring_with_labels(_load(args))
    sizes = w.block_sizes()
    found = chambers(w)
    report.line("n", w.n)
    report.line("chambers", len(found))
    report.line("triangles", sum(1 for chamber in found if chamber.is_triangle()))
    rows = []
    for chamber in found:
        lines = sorted(labels[wire] for wire in chamber.lines)
        doubles = sum(1 for v in chamber.vertices if sizes[v] == 2)
        rows.append(
            {
                "chamber": chamber.id,
                "lines": ",".join(str(line) for line in lines),
                "vertices": len(chamber.vertices),
                "double_points": doubles,
            }
        )
        report.record(
            ChamberRecord(
                kind="chamber",
                chamber=chamber.id,
                lines=lines,
                vertices=list(chamber.vertices),
                double_points=doubles,
            )
        )
    report.table(["chamber", "lines", "vertices", "double_points"], rows)


def cmd_coxeter_test(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    if not args.file and args.solve_to is None:
        raise WorkbenchInputError("coxeter-test needs a FILE or --solve-to")

    if args.file:
        w, _ = _wiring_with_labels(_load(args))
        result = coxeter_test(w)
        report.line("chambers", result.chambers)
        report.line("graph classes", result.classes)
        report.line("isomorphic", result.isomorphic)
        report.line("connected", result.connected)
        report.line("uniform", result.is_uniform())
        if result.graph is not None:
            report.line("graph", result.graph.describe())
        if result.x is not None:
            report.line("x", result.x)
        if result.tag is not None:
            report.line("tag", result.tag)
        if result.reason:
            report.line("reason", result.reason)
        report.record(
            CoxeterRecord(kind="coxeter-test", x=result.x, uniform=result.is_uniform(), n=w.n, t=None, reason=result.reason)
        )
        report.failed = not result.is_uniform()

    if args.solve_to is not None:
        rows = []
        for x in range(4, args.solve_to + 1):
            solution = solve_cox_system(x)
            rows.append(
                {
                    "x": x,
                    "feasible": _bool(solution.feasible),
                    "n": "" if solution.n is None else solution.n,
                    "t": "" if solution.t is None else str(solution.t),
                    "reason": solution.reason or "",
                }
            )
            report.record(
                CoxeterRecord(
                    kind="cox-solution",
                    x=x,
                    uniform=solution.feasible,
                    n=solution.n,
                    t=None if solution.t is None else list(solution.t.as_tuple()),
                    reason=solution.reason,
                )
            )
        report.table(["x", "feasible", "n", "t", "reason"], rows, heading=f"Coxeter system, x = 4..{args.solve_to}")


def cmd_detect(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    t = _load(args).to_tvector()
    tags = detect_family(t.n, t)
    report.line("n", t.n)
    report.line("t", t)
    report.line("families", ", ".join(str(tag) for tag in tags))
    report.record(FamilyRecord(kind="families", n=t.n, t=list(t.as_tuple()), tags=[str(tag) for tag in tags]))


def _file_stem(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", text.lower()).strip("_")


def cmd_generate(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    parameter = {"near-pencil": args.n, "r1": args.m, "r2": args.k, "coxeter": args.name}.get(args.family)
    family = generate(args.family, parameter)
    report.line("family", family.tag)
    report.line("n", family.n)
    report.line("t", family.t)
    report.line("realised", family.has_realisation())
    if family.lines is not None:
        report.table(["line", "a", "b", "c"], [
            {"line": i, "a": format_fraction(line.a), "b": format_fraction(line.b), "c": format_fraction(line.c)}
            for i, line in enumerate(family.lines)
        ])
    report.record(FamilyRecord(kind="generated", n=family.n, t=list(family.t.as_tuple()), tags=[str(family.tag)]))

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        stem = _file_stem(str(family.tag))
        files = {f"{stem}.tvec": format_tvector(family.t)}
        if family.lines is not None and family.sweep is not None:
            files[f"{stem}.lines"] = format_lines(family.lines)
            files[f"{stem}.arr"] = format_arrangement(lines_to_arrangement(family.lines))
            files[f"{stem}.wd"] = format_sweep(family.sweep)
        for name, text in files.items():
            (out / name).write_text(text, encoding="utf-8")
            report.line("wrote", out / name)


def _parse_count_bound(text: str) -> Tuple[int, CountBound]:
    """WEIGHT:LOWER:UPPER with either bound left empty, e.g. "2::5"."""
    parts = text.split(":")
    if len(parts) != 3:
        raise WorkbenchInputError(f"--bound expects WEIGHT:LOWER:UPPER, got {text!r}")
    try:
        weight = int(parts[0])
        lower = int(parts[1]) if parts[1].strip() else None
        upper = int(parts[2]) if parts[2].strip() else None
    except ValueError:
        raise WorkbenchInputError(f"--bound expects integers, got {text!r}") from None
    return weight, (lower, upper)


def _query(args: argparse.Namespace, n: int) -> FeasibilityQuery:
    return FeasibilityQuery(
        n=n,
        max_mult=args.max_mult,
        require_simplicial=args.simplicial,
        require_splits=args.real_rooted,
        require_four_t2_le_f2=args.chamber_bound,
        include_external=args.external,
        assume_stretchable=args.stretchable,
        extra=args.constraint or [],
        count_bounds=dict(_parse_count_bound(text) for text in args.bound or []),
        t2_t3_ratio=args.ratio,
        prune=not args.no_prune,
    )


def cmd_enumerate(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    result = enumerate_feasible(_query(args, args.n))
    report.line("n", args.n)
    report.line("max_mult", args.max_mult)
    report.line("profile", result.query.profile())
    report.line("feasible", result.count)
    report.line("nodes", result.stats.nodes)
    report.line("pruned", result.stats.pruned)
    rows = []
    for t in result.vectors:
        f = f_vector(t)
        rows.append({"t": str(t), "f0": f.f0, "f1": f.f1, "f2": f.f2})
        report.record(TVectorRecord(kind="tvector", n=t.n, t=list(t.as_tuple()), f2=f.f2))
    report.table(["t", "f0", "f1", "f2"], rows)


def _workers(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    return args.workers if args.workers is not None else settings.scan_workers


def cmd_scan(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    result = scan_bound(_query(args, max(args.n_from, 3)), args.n_from, args.n_to, workers=_workers(args, settings))
    report.line("profile", result.profile)
    report.line("max_mult", result.max_mult)
    report.summary.append(result.summary())
    smallest = result.smallest_feasible()
    report.line("smallest feasible n", "none" if smallest is None else smallest)
    rows = []
    for row in result.rows:
        rows.append({"n": row.n, "feasible": row.feasible, "nodes": row.nodes, "pruned": row.pruned})
        report.record(ScanRecord(kind="scan", n=row.n, feasible=row.feasible, nodes=row.nodes, pruned=row.pruned))
    report.table(["n", "feasible", "nodes", "pruned"], rows)


def _bound_row(bound: StatedBound) -> Dict[str, object]:
    return {
        "name": bound.name,
        "statement": bound.statement,
        "root": bound.root,
        "bound": bound.bound,
        "note": bound.note or "",
    }


def _parse_alpha(text: str) -> Tuple[int, str]:
    weight, sep, value = text.partition("=")
    if not sep or not weight.strip().isdigit():
        raise WorkbenchInputError(f"--alpha expects WEIGHT=VALUE, got {text!r}")
    return int(weight), value.strip()


def cmd_bounds(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    bounds = all_stated_bounds() + [epsilon_bound(eps) for eps in args.eps or []]
    if args.alpha is not None:
        bounds.append(growth_remark_bound(dict(_parse_alpha(text) for text in args.alpha)))
    report.line("epsilon max", sympy.sstr(epsilon_max()))
    report.table(["name", "statement", "root", "bound", "note"], [_bound_row(bound) for bound in bounds])
    for bound in bounds:
        report.record(
            BoundRecord(
                kind="bound",
                name=bound.name,
                statement=bound.statement,
                root=bound.root,
                bound=bound.bound,
                note=bound.note,
            )
        )
    if args.cross_check:
        for eps in args.eps or []:
            scan = epsilon_cross_check(eps, window=args.window, workers=_workers(args, settings))
            report.line(f"epsilon={eps} window", scan.summary())
            if scan.largest_feasible() is not None:
                report.failed = True


def cmd_probe(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    rows = []
    consistent = 0
    for n in range(args.n_from, args.n_to + 1):
        probe = dirac_motzkin_probe(n)
        consistent += probe.is_consistent()
        rows.append(
            {
                "n": n,
                "below": len(probe.below),
                "at": _vectors_text(probe.at),
                "expected": _vectors_text(probe.expected),
                "consistent": _bool(probe.is_consistent()),
            }
        )
        report.record(
            ProbeRecord(
                kind="dirac-probe",
                n=n,
                below=[list(t.as_tuple()) for t in probe.below],
                at=[list(t.as_tuple()) for t in probe.at],
                consistent=probe.is_consistent(),
            )
        )
    report.line("consistent", f"{consistent} of {len(rows)}")
    report.table(["n", "below", "at", "expected", "consistent"], rows)
    report.failed = consistent != len(rows)


def cmd_ratio(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    result = conjecture_ratio_check(sextuple_vectors(args.n_from, args.n_to))
    report.line("vectors", len(result.rows))
    report.line("violations", len(result.violations()))
    rows = []
    for row in result.rows:
        rows.append(
            {
                "n": row.n,
                "t": str(row.t),
                "t6": row.t6,
                "ratio": format_fraction(row.ratio),
                "lower": format_fraction(row.lower),
                "upper": format_fraction(row.upper),
                "within": _bool(row.within),
            }
        )
        report.record(
            RatioRecord(
                kind="ratio",
                n=row.n,
                t6=row.t6,
                ratio=format_fraction(row.ratio),
                lower=format_fraction(row.lower),
                upper=format_fraction(row.upper),
                within=row.within,
            )
        )
    report.table(["n", "t", "t6", "ratio", "lower", "upper", "within"], rows)
    report.failed = not result.is_passing()


def cmd_audit(args: argparse.Namespace, report: Report, settings: WorkbenchSettings) -> None:
    w, _ = _wiring_with_labels(_load(args))
    audit = double_point_chamber_audit(w)
    report.line("n", audit.n)
    report.line("t", audit.t)
    report.line("applicable", audit.applicable)
    if not audit.applicable:
        report.line("reason", audit.reason)
        return
    f2 = f_vector(audit.t).f2
    report.line("chambers", audit.chambers())
    report.line("max double points per chamber", audit.max_per_chamber())
    report.line("every chamber has one", audit.every_chamber_has_one())
    report.line("4 t2 = f2", 4 * audit.t.t(2) == f2)
    report.line("double point with only triple neighbours", has_double_point_with_triple_neighbours(w))
    report.line("chambers with at most one triple point", len(chambers_with_few_triple_points(w)))
    histogram: Dict[int, int] = {}
    for count in audit.double_points:
        histogram[count] = histogram.get(count, 0) + 1
    report.table(["double_points", "chambers"], [{"double_points": k, "chambers": v} for k, v in sorted(histogram.items())])
    report.failed = not audit.is_passing()


COMMANDS: Dict[str, Command] = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "charpoly": cmd_charpoly,
    "check": cmd_check,
    "chambers": cmd_chambers,
    "coxeter-test": cmd_coxeter_test,
    "detect": cmd_detect,
    "generate": cmd_generate,
    "enumerate": cmd_enumerate,
    "scan": cmd_scan,
    "audit": cmd_audit,
    "bounds": cmd_bounds,
    "probe": cmd_probe,
    "ratio": cmd_ratio,
}


def _add_profile_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-mult", type=int, required=True, help="Largest vertex weight allowed")
    parser.add_argument("--simplicial", action="store_true", help="Require equality in Melchior's inequality")
    parser.add_argument("--real-rooted", action="store_true", help="Require chi to split over R")
    parser.add_argument("--chamber-bound", action="store_true", help="Require 4 t2 <= f2")
    parser.add_argument("--external", action="store_true", help="Include the assumed external bounds")
    parser.add_argument("--stretchable", action="store_true", help="Assume stretchability (adds ext-langer)")
    parser.add_argument("--constraint", action="append", help="Extra catalogue constraint id (repeatable)")
    parser.add_argument("--ratio", help="Require t2 <= RATIO * t3 (exact, e.g. 13/16)")
    parser.add_argument("--bound", action="append", help="Count bound WEIGHT:LOWER:UPPER, e.g. 2::5 (repeatable)")
    parser.add_argument("--no-prune", action="store_true", help="Check every vector instead of pruning")


def _add_range_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-from", type=int, required=True, help="First n")
    parser.add_argument("--n-to", type=int, required=True, help="Last n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMAT_NAMES, help="Input format (default: from the extension)")
    common.add_argument("--records", help="Write JSON-lines records here (default: $PSEUDOLINE_RECORDS)")

    parser = argparse.ArgumentParser(
        prog="pseudoline-workbench",
        description="Exact invariants, inequality checks and feasibility scans for pseudoline arrangements",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    for verb, help_text in (
        ("validate", "Validate an arrangement, wiring, line set or t-vector"),
        ("invariants", "t-vector, f-vector, chi, roots and family of the input"),
        ("charpoly", "Characteristic polynomial, closed form against the lattice"),
        ("chambers", "List the chambers of a wiring or line set"),
        ("detect", "Match the t-vector against the known families"),
        ("audit", "Double points per chamber"),
    ):
        sub = verbs.add_parser(verb, parents=[common], help=help_text)
        sub.add_argument("file", help="Input file (.arr, .lines, .wd, .tvec)")
        if verb == "charpoly":
            sub.add_argument("--no-lattice", action="store_true", help="Skip the Moebius computation")

    check = verbs.add_parser("check", parents=[common], help="Evaluate inequality suites on the input")
    check.add_argument("file", help="Input file")
    check.add_argument("--suite", action="append", choices=suite_ids(), help="Suite to run (repeatable)")
    check.add_argument("--constraint", action="append", help="Single constraint id (repeatable)")
    check.add_argument("--simplicial", action="store_true", help="Treat the arrangement as simplicial")
    check.add_argument("--real-rooted", action="store_true", help="Treat chi as splitting over R")
    check.add_argument("--external", action="store_true", help="Accept the assumed external bounds")
    check.add_argument("--stretchable", action="store_true", help="Treat the arrangement as stretchable")

    coxeter = verbs.add_parser("coxeter-test", parents=[common], help="Chamber-graph Coxeter characterisation")
    coxeter.add_argument("file", nargs="?", help="Wiring or line set")
    coxeter.add_argument("--solve-to", type=int, help="Also solve the Coxeter system for x = 4..SOLVE_TO")

    gen = verbs.add_parser("generate", parents=[common], help="Generate a named arrangement or family member")
    gen.add_argument("--family", required=True, choices=FAMILY_NAMES)
    gen.add_argument("--n", type=int, help="Line count (near-pencil)")
    gen.add_argument("--m", type=int, help="Parameter m of R(1), 2m lines")
    gen.add_argument("--k", type=int, help="Parameter k of R(2), 4k+1 lines")
    gen.add_argument("--name", help="Coxeter arrangement: A61, A91 or A151")
    gen.add_argument("--out", help="Directory to write .tvec/.lines/.arr/.wd files into")

    enum = verbs.add_parser("enumerate", parents=[common], help="All feasible t-vectors for one n")
    enum.add_argument("--n", type=int, required=True, help="Line count")
    _add_profile_flags(enum)

    scan = verbs.add_parser("scan", parents=[common], help="Feasible counts over a range of n")
    _add_range_flags(scan)
    _add_profile_flags(scan)
    scan.add_argument("--workers", type=int, help="Processes (default: $PSEUDOLINE_SCAN_WORKERS or 1)")

    bounds = verbs.add_parser("bounds", parents=[common], help="Closed-form finiteness bounds")
    bounds.add_argument("--eps", action="append", help="Epsilon for the sextuple bound (repeatable, exact)")
    bounds.add_argument("--alpha", action="append", help="Growth remark weight WEIGHT=VALUE (repeatable)")
    bounds.add_argument("--cross-check", action="store_true", help="Enumerate a window above each epsilon bound")
    bounds.add_argument("--window", type=int, default=2, help="Width of the cross-check window")
    bounds.add_argument("--workers", type=int, help="Processes for the cross-check")

    probe = verbs.add_parser("probe", parents=[common], help="Dirac-Motzkin probes over a range of n")
    _add_range_flags(probe)

    ratio = verbs.add_parser("ratio", parents=[common], help="t6/n^2 of the multiplicity six vectors")
    _add_range_flags(ratio)
    return parser


def _error_text(error: Exception) -> str:
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ()))
        return f"{where}: {first.get('msg')}" if where else str(first.get("msg"))
    return str(error)


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run one verb.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)
        out: Stream for the human report (stdout when None)

    Returns:
        Exit code: 0 done, 1 a check failed, 2 input or usage error
    """
    # Parse arguments; argparse exits on --help and on usage errors
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    # Load settings and enable tracing for this verb
    settings = load_settings()
    enable_tracing_for_command(args.verb, settings)

    # Run the verb; input errors never reach stdout
    report = Report(verb=args.verb)
    try:
        COMMANDS[args.verb](args, report, settings)
    except (WorkbenchInputError, ValidationError) as e:
        print(f"❌ {args.verb}: {_error_text(e)}", file=sys.stderr)
        return 2

    # Emit the report and the records
    return report_emit(report, out, args.records or settings.records_path)


def main() -> None:
    """Console script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
