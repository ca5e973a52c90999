"""Command-line front end.

Every command builds a ``RunReport`` and prints it as JSON (sorted keys) or
as a CSV table of its results.  Exit codes: 0 success, 1 usage or invalid
input, 2 an enumerated solution failed its own system's equations, 3
internal error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from diolab import __version__
from diolab.claims import registry_table, run_audit
from diolab.concordant import ConcordantPair, search_concordant
from diolab.curves import (
    CoefficientTriple,
    CubicCurve,
    a2_coefficient_match,
    curve_eight,
    curve_six,
    discriminant_quantity,
    double_to_cubic,
    frey_curve,
    midpoint_identity_check,
    reflect_transform,
)
from diolab.descent import EquationFamily, exhaustive_search
from diolab.errors import DiolabError
from diolab.numeric import fmt_exact
from diolab.records import ClaimResult, _jsonable
from diolab.systems import (
    SystemKind,
    build_system,
    check_solution,
    enumerate_solutions,
    joint_solvability,
    solution_holds,
)
from diolab.weil import QuarticOmega, QuarticPoint, map_to_cubic, omega_membership, phi_psi

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict[str, Any]
    results: list[dict[str, Any]] = field(default_factory=list)
    findings: list[ClaimResult] = field(default_factory=list)
    elapsed_ms: int = 0
    version: str = __version__
    # set when the artifact's own invariants break; drives exit code 2
    violations: list[ClaimResult] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "results": [_jsonable(r) for r in self.results],
            "findings": [f.to_dict() for f in self.findings],
            "violations": [v.to_dict() for v in self.violations],
            "elapsed_ms": self.elapsed_ms,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        rows = self.to_dict()["results"]
        columns = sorted({k for row in rows for k in row})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(col)) for col in columns])
        return buf.getvalue()


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


# --- helpers ---------------------------------------------------------------------

def _triple(args) -> CoefficientTriple:
    return CoefficientTriple.from_ab(args.a, args.b)


def _curve_record(name: str, curve: CubicCurve) -> dict[str, Any]:
    return {
        "record": "curve",
        "name": name,
        "equation": str(curve),
        "factored": curve.factored(),
        "coefficients": [fmt_exact(c) for c in curve.coefficients],
    }


def _check_record(name: str, holds: bool, **extra) -> dict[str, Any]:
    return {"record": "check", "name": name, "holds": holds, **extra}


def _solution_record(system: str, sol, holds: bool) -> dict[str, Any]:
    return {
        "record": "solution",
        "system": system,
        "u1": sol.u1, "u2": sol.u2, "w": sol.w, "t": sol.t, "v": sol.v,
        "u": sol.u,
        "scaled": sol.scaled,
        "holds": holds,
    }


def _parse_point(text: str) -> QuarticPoint:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError(f"--point needs four comma-separated integers, got {text!r}")
    try:
        coords = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"--point needs integers, got {text!r}") from None
    try:
        return QuarticPoint(*coords)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --- commands --------------------------------------------------------------------

def cmd_frey(args) -> RunReport:
    t = _triple(args)
    five, six, eight = frey_curve(t), curve_six(t), curve_eight(t)
    report = RunReport("frey", {"a": t.a, "b": t.b, "c": t.c})
    report.results = [
        _curve_record("frey", five),
        _curve_record("six", six),
        _curve_record("eight", eight),
    ]
    disc = discriminant_quantity(t)
    checks = [
        ("reflect_six_to_frey", reflect_transform(six, t.a) == five, {"s": t.a}),
        ("reflect_eight_to_six", reflect_transform(eight, t.c) == six, {"s": t.c}),
        ("midpoint_identity", midpoint_identity_check(t), {}),
        ("discriminant_equals_abs_c", disc == abs(t.c), {"value": disc}),
        ("a2_round_trip", double_to_cubic(a2_coefficient_match(t)) == five,
         {"double_equation": list(a2_coefficient_match(t).as_tuple())}),
    ]
    for name, holds, extra in checks:
        report.results.append(_check_record(name, holds, **extra))
        if not holds:
            report.violations.append(ClaimResult(name, False, None, None, triple=t.as_tuple()))
    return report


def cmd_audit(args) -> RunReport:
    t = _triple(args)
    if args.pq_bound < 2:
        raise UsageError("--pq-bound must be >= 2")
    audit = run_audit(t, args.pq_bound, args.jobs)
    joint = joint_solvability(t, args.pq_bound, shared_wtv=True, jobs=args.jobs)
    report = RunReport("audit", {"a": t.a, "b": t.b, "c": t.c, "pq_bound": args.pq_bound})
    for name, sols in (("system9", audit.system9), ("system10", audit.system10)):
        report.results.extend(_solution_record(name, s, True) for s in sols)
    report.results.extend({"record": "claim", **r.to_dict()} for r in audit.claims)
    report.results.append({
        "record": "joint",
        "solvable9": joint.solvable9,
        "solvable10": joint.solvable10,
        "independent": joint.solvable9 and joint.solvable10,
        "shared": bool(joint.shared_pairs),
        "shared_same_orientation": any(p[2] for p in joint.shared_pairs),
    })
    report.findings = list(audit.findings)
    report.violations = list(audit.violations)
    return report


def cmd_enumerate(args) -> RunReport:
    t = _triple(args)
    kind = SystemKind.parse(args.system)
    if args.pq_bound < 2:
        raise UsageError("--pq-bound must be >= 2")
    s = build_system(kind, t)
    sols = enumerate_solutions(s, args.pq_bound, args.allow_swap, args.max_scale, args.jobs)
    report = RunReport("enumerate", {
        "a": t.a, "b": t.b, "c": t.c, "system": kind.value, "pq_bound": args.pq_bound,
        "allow_swap": args.allow_swap, "max_scale": args.max_scale,
        "equations": s.render(),
    })
    for sol in sols:
        checks = check_solution(s, sol)
        report.results.append(_solution_record(kind.value, sol, solution_holds(checks)))
        report.violations.extend(r for r in checks if not r.holds)
    return report


def cmd_descent(args) -> RunReport:
    if args.family == "lebesgue":
        if args.n is None:
            raise UsageError("--family lebesgue needs --n")
        family = EquationFamily.lebesgue(args.n)
    else:
        if args.n is not None:
            raise UsageError("--n only applies to the lebesgue family")
        family = EquationFamily(args.family)
    hits = exhaustive_search(family, args.bound, args.jobs)
    report = RunReport("descent", {"family": family.kind, "n": family.n, "bound": args.bound,
                                   "equation": family.describe()})
    report.results = [{"x": x, "y": y, "z": z} for x, y, z in hits]
    return report


def cmd_concordant(args) -> RunReport:
    pair = ConcordantPair(args.m, args.n)
    hits = search_concordant(pair, args.bound, args.jobs)
    report = RunReport("concordant", {"m": pair.m, "n": pair.n, "bound": args.bound})
    report.results = [{"X": x, "Y": y, "Z": z, "T": t} for x, y, z, t in hits]
    return report


def cmd_quartic(args) -> RunReport:
    q = QuarticOmega(args.A, args.B, args.C, args.alpha, args.beta, args.gamma)
    pt = _parse_point(args.point)
    member = omega_membership(q, pt)
    phi, psi = phi_psi(q, pt)
    record: dict[str, Any] = {
        "record": "quartic",
        "membership": member,
        "phi": phi,
        "psi": psi,
        "delta": q.delta,
        "cubic": str(q.cubic()),
        "x": None,
        "y": None,
        "on_cubic": None,
    }
    if member:
        x, y = map_to_cubic(q, pt)
        record.update(x=x, y=y, on_cubic=q.cubic().contains(x, y))
    report = RunReport("quartic", {"omega": list(q.as_tuple()), "point": list(pt.as_tuple())})
    report.results = [record]
    return report


def cmd_claims(args) -> RunReport:
    report = RunReport("claims", {})
    report.results = registry_table()
    return report


# --- parser ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--cache", help="append a one-line JSON summary to this file")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    p.add_argument("--timing", action="store_true", help="record wall time in elapsed_ms")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diolab", description="Exact-arithmetic Diophantine laboratory.")
    parser.add_argument("--version", action="version", version=f"diolab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("frey", help="Frey curve and the related cubics of a triple")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_frey)

    p = sub.add_parser("audit", help="enumerate both systems and run the claims registry")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--pq-bound", type=int, default=10)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("enumerate", help="solutions of one system or quartic")
    p.add_argument("--system", required=True, help="9, 10, q1 .. q8")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--pq-bound", type=int, default=10)
    p.add_argument("--allow-swap", action="store_true")
    p.add_argument("--max-scale", type=_positive, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("descent", help="bounded search of a quartic family")
    p.add_argument("--family", required=True, choices=EquationFamily.KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--bound", type=_positive, required=True)
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("concordant", help="search X^2 + mY^2 and X^2 + nY^2 both square")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=_positive, required=True)
    p.set_defaults(func=cmd_concordant)

    p = sub.add_parser("quartic", help="membership and cubic image of a point on an oblique quartic")
    for name in ("A", "B", "C", "alpha", "beta", "gamma"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--point", required=True, help="U,V,W,T")
    p.set_defaults(func=cmd_quartic)

    p = sub.add_parser("claims", help="print the claims registry")
    p.set_defaults(func=cmd_claims)

    for name in sub.choices:
        _common(sub.choices[name])
    return parser


def _emit(report: RunReport, args) -> None:
    text = report.to_csv() if args.format == "csv" else report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.cache:
        summary = {
            "command": report.command,
            "inputs": _jsonable(report.inputs),
            "results": len(report.results),
            "findings": len(report.findings),
            "violations": len(report.violations),
            "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
            "version": report.version,
        }
        with open(args.cache, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(summary, sort_keys=True) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        start = time.perf_counter()
        report = args.func(args)
        if args.timing:
            report.elapsed_ms = int((time.perf_counter() - start) * 1000)
        _emit(report, args)
    except (UsageError, DiolabError, ValueError) as exc:
        print(f"diolab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"diolab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"diolab: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_VIOLATION if report.violations else EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
