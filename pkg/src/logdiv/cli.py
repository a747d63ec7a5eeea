"""Command-line front end.

`logdiv analyze -f <poly> --vars a,b,c` runs the full pipeline -- reducedness,
weight search, free-basis certification, structure constants, Koszul and
holonomicity verdicts, the operator complex, the dual presentation, and the
annihilator inclusion -- and emits a text or JSON report.  Single-stage
subcommands (derlog, koszul, dual, spencer, check-ann) share the flag
surface.

Exit codes: 0 for a completed analysis (negative mathematical verdicts are
still successful analyses), 2 for input errors, 3 for internal invariant
violations.  JSON output is deterministic byte-for-byte; stage timings are
reported on the text rendering only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import (NotDivisible, Poly, PolyParseError, is_squarefree,
                      parse_poly, weighted_homogeneity)
from .divisor import (LogBasis, NotReduced, derlog, holonomicity_check,
                      koszul_check)
from .duality import (MismatchWithTilde, annihilator_check, dual_presentation,
                      duality_identity_check, spencer_complex,
                      spencer_vs_syzygies, tilde_generators)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


@dataclass
class DivisorReport:
    """Aggregated analysis; stages blocked by an earlier failure carry a
    'skipped: <reason>' marker instead of a verdict."""

    input: str
    variables: list[str]
    reduced: bool = False
    weighted_homogeneous: Optional[dict] = None
    free_certified: bool = False
    diagnostic: str = ""
    basis: Optional[dict] = None
    alpha: Optional[dict] = None
    koszul: object = "skipped: pending"
    holonomic: object = "skipped: pending"
    spencer_d2_zero: object = "skipped: pending"
    spencer_matches_syzygies: object = "skipped: pending"
    tilde_generators: object = "skipped: pending"
    duality_theorem_verified: object = "skipped: pending"
    annihilator_check: object = "skipped: pending"
    timings: dict[str, float] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        # fixed key order; timings intentionally omitted (volatile)
        return {
            "input": self.input,
            "variables": list(self.variables),
            "reduced": self.reduced,
            "weighted_homogeneous": self.weighted_homogeneous,
            "free_certified": self.free_certified,
            "diagnostic": self.diagnostic,
            "basis": self.basis,
            "alpha": self.alpha,
            "koszul": self.koszul,
            "holonomic": self.holonomic,
            "spencer_d2_zero": self.spencer_d2_zero,
            "spencer_matches_syzygies": self.spencer_matches_syzygies,
            "tilde_generators": self.tilde_generators,
            "duality_theorem_verified": self.duality_theorem_verified,
            "annihilator_check": self.annihilator_check,
        }

    def to_text(self) -> str:
        d = self.to_json_dict()
        lines = [f"divisor equation f = {self.input}",
                 f"variables: {', '.join(self.variables)}"]

        def fmt(value, indent="  "):
            if isinstance(value, dict):
                return "\n".join(f"{indent}{k}: {fmt(v, indent + '  ').lstrip()}"
                                 if not isinstance(v, (dict, list))
                                 else f"{indent}{k}:\n{fmt(v, indent + '  ')}"
                                 for k, v in value.items())
            if isinstance(value, list):
                return "\n".join(f"{indent}- {v}" for v in value)
            return f"{indent}{value}"

        for key in list(d)[2:]:
            value = d[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{key}:")
                lines.append(fmt(value))
            else:
                lines.append(f"{key}: {value}")
        if self.timings:
            lines.append("timings (s):")
            for stage, dt in self.timings.items():
                lines.append(f"  {stage}: {dt:.3f}")
        return "\n".join(lines) + "\n"


def _basis_dict(basis: LogBasis) -> dict:
    return {
        "operators": [str(d) for d in basis.fields],
        "saito_matrix": [[str(p) for p in row] for row in basis.matrix],
        "det_constant": str(basis.det_constant),
        "multipliers": [str(m) for m in basis.multipliers],
    }


def _alpha_dict(basis: LogBasis) -> dict:
    out = {}
    n = basis.n
    for i in range(n):
        for j in range(i + 1, n):
            out[f"[{i + 1},{j + 1}]"] = [str(p) for p in basis.alpha[i][j]]
    return out


def build_report(f_text: str, var_names: Sequence[str], max_degree: int = 12,
                 skip_spencer: bool = False,
                 stages: Optional[set[str]] = None) -> DivisorReport:
    """Run the pipeline; `stages` restricts the work for subcommands."""
    report = DivisorReport(input=f_text, variables=list(var_names))
    want = stages  # None means everything

    def wanted(name: str) -> bool:
        return want is None or name in want

    clock = time.perf_counter
    f = parse_poly(f_text, var_names)
    if f.is_zero():
        raise NotReduced(f, Poly.zero(f.vars))

    t0 = clock()
    sqf, witness = is_squarefree(f)
    if not sqf:
        raise NotReduced(f, witness)
    report.reduced = True
    wv = weighted_homogeneity(f)
    report.weighted_homogeneous = (
        {"weights": list(wv.weights), "degree": wv.degree} if wv else None)
    report.timings["reduced+weights"] = clock() - t0

    t0 = clock()
    result = derlog(f, max_degree=max_degree)
    report.timings["derlog"] = clock() - t0
    report.diagnostic = result.diagnostic
    if not result.certified:
        report.free_certified = False
        reason = "skipped: freeness not certified"
        for key in ("koszul", "holonomic", "spencer_d2_zero",
                    "spencer_matches_syzygies", "tilde_generators",
                    "duality_theorem_verified", "annihilator_check"):
            setattr(report, key, reason)
        report.basis = {
            "operators": [str(d) for _, d in result.generators],
            "multipliers": [str(m) for m, _ in result.generators],
        }
        return report
    basis = result.basis
    report.free_certified = True
    report.basis = _basis_dict(basis)
    report.alpha = _alpha_dict(basis)

    if wanted("koszul"):
        t0 = clock()
        k = koszul_check(basis)
        report.koszul = {
            "koszul_free": k.koszul,
            "scope": k.scope,
            "failure_index": k.failure_index,
            "witness": str(k.witness) if k.witness is not None else None,
        }
        report.timings["koszul"] = clock() - t0
    if wanted("holonomic"):
        t0 = clock()
        report.holonomic = holonomicity_check(basis)
        report.timings["holonomic"] = clock() - t0
    if wanted("spencer"):
        if skip_spencer:
            report.spencer_d2_zero = "skipped: --skip-spencer"
            report.spencer_matches_syzygies = "skipped: --skip-spencer"
        else:
            t0 = clock()
            complex_ = spencer_complex(basis)
            report.spencer_d2_zero = complex_.d2_is_zero()
            if basis.n <= 3:
                report.spencer_matches_syzygies = spencer_vs_syzygies(basis)
            else:
                report.spencer_matches_syzygies = None
            report.timings["spencer"] = clock() - t0
    if wanted("dual"):
        t0 = clock()
        report.tilde_generators = [str(t) for t in tilde_generators(basis)]
        dual_presentation(basis)  # raises MismatchWithTilde on failure
        report.duality_theorem_verified = all(
            r.ok for r in duality_identity_check(basis))
        report.timings["dual"] = clock() - t0
    if wanted("check-ann"):
        t0 = clock()
        report.annihilator_check = annihilator_check(basis)
        report.timings["check-ann"] = clock() - t0
    return report


_STAGES = {
    "analyze": None,
    "derlog": set(),
    "koszul": {"koszul"},
    "dual": {"dual"},
    "spencer": {"spencer"},
    "check-ann": {"check-ann"},
}


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("-f", required=True, metavar="POLY",
                   help="divisor equation in the polynomial grammar")
    p.add_argument("--vars", required=True, metavar="A,B,C",
                   help="comma-separated variable names (order-significant)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", help="write the report to a file")
    p.add_argument("--max-degree", type=int, default=12,
                   help="generator degree bound for the basis search (default 12)")
    p.add_argument("--skip-spencer", action="store_true",
                   help="skip the complex construction stages")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logdiv",
        description="analyze a polynomial divisor: logarithmic derivations, "
                    "freeness, Koszul and holonomicity verdicts, duality checks")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("analyze", "run the full pipeline"),
        ("derlog", "compute and certify logarithmic derivations"),
        ("koszul", "regular-sequence verdict on the basis symbols"),
        ("dual", "shifted generators and the duality identity"),
        ("spencer", "operator complex construction and syzygy comparison"),
        ("check-ann", "verify the shifted generators annihilate 1/f"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _add_common_flags(p)
    return parser


def _render(report: DivisorReport, fmt: str, command: str) -> str:
    if fmt == "json":
        payload = report.to_json_dict()
        if command != "analyze":
            keep = {"input", "variables", "reduced", "free_certified",
                    "diagnostic", "basis"}
            keep |= {
                "derlog": set(),
                "koszul": {"koszul"},
                "dual": {"tilde_generators", "duality_theorem_verified", "alpha"},
                "spencer": {"spencer_d2_zero", "spencer_matches_syzygies"},
                "check-ann": {"annihilator_check"},
            }[command]
            payload = {k: v for k, v in payload.items() if k in keep}
        return json.dumps(payload, indent=2) + "\n"
    if command == "analyze":
        return report.to_text()
    lines = [f"f = {report.input} ({'certified free' if report.free_certified else report.diagnostic})"]
    if command == "derlog" and report.basis:
        for key, value in report.basis.items():
            lines.append(f"{key}: {value}")
    elif command == "koszul":
        k = report.koszul
        if isinstance(k, dict):
            verdict = "Koszul free" if k["koszul_free"] else "NOT Koszul free"
            lines.append(f"{verdict} ({k['scope']})")
            if k["witness"]:
                lines.append(f"witness: {k['witness']} (zerodivisor at index {k['failure_index']})")
        else:
            lines.append(str(k))
    elif command == "dual":
        lines.append(f"tilde generators: {report.tilde_generators}")
        lines.append(f"duality identity verified: {report.duality_theorem_verified}")
    elif command == "spencer":
        lines.append(f"differential squares to zero: {report.spencer_d2_zero}")
        lines.append(f"matches syzygy modules: {report.spencer_matches_syzygies}")
    elif command == "check-ann":
        if report.annihilator_check is True:
            lines.append("all tilde generators annihilate 1/f")
        else:
            lines.append(f"annihilator check: {report.annihilator_check}")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    var_names = [v.strip() for v in args.vars.split(",") if v.strip()]
    if not var_names or len(set(var_names)) != len(var_names):
        print("error: --vars needs a list of distinct names", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = build_report(args.f, var_names, max_degree=args.max_degree,
                              skip_spencer=args.skip_spencer,
                              stages=_STAGES[args.command])
    except (PolyParseError, NotReduced, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MismatchWithTilde, NotDivisible) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = _render(report, args.format, args.command)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
