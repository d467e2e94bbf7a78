"""Command-line entry point: ``cubeperm report|verify|sign|classnum``.

Exit codes: 0 success (theorem-formula disagreements are findings, not
failures), 1 usage or validation error, 2 a lemma/oracle check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Any

from . import binform
from .errors import CubePermError, NotPrimitiveRoot
from .modular import is_primitive_root, require_one_mod_three
from .permsign import sign_s_p
from .verify import SCOPES, RangeSummary, TheoremReport, audit_one, audit_range, summarize

EXIT_OK, EXIT_USAGE, EXIT_CHECK_FAILED = 0, 1, 2

CSV_COLUMNS = (
    "p", "mod12", "case", "g", "class_rep", "n", "pi_a", "pi_b", "w", "r", "s",
    "delta", "alpha", "beta", "gamma", "h", "actual_sign",
    "exponent", "formula_sign", "agrees", "plus", "minus",
)


def _exponent(e: int | Fraction) -> int | str:
    return int(e) if isinstance(e, int) or e.denominator == 1 else str(e)


def report_to_dict(rep: TheoremReport) -> dict[str, Any]:
    ctx = rep.ctx
    return {
        "p": rep.p,
        "g": ctx.g,
        "n": ctx.n,
        "mod12": rep.mod12,
        "case": rep.case,
        "pi": {"a": ctx.pi.a, "b": ctx.pi.b},
        "w": ctx.w,
        "r": ctx.r,
        "s": ctx.s,
        "delta": ctx.counts.delta,
        "alpha": ctx.counts.alpha,
        "beta": ctx.counts.beta,
        "gamma": ctx.counts.gamma,
        "h": ctx.h,
        "actual_sign": rep.actual_sign,
        "formula": [
            {
                "class_rep": row.class_rep,
                "class_size": row.class_size,
                "pi": {"a": row.pi.a, "b": row.pi.b},
                "w": row.w,
                "r": row.r,
                "s": row.s,
                "beta": row.beta,
                "gamma": row.gamma,
                "exponent": _exponent(row.exponent),
                "sign": row.formula_sign,
                "agrees": row.agrees,
            }
            for row in rep.classes
        ],
        "balance": None if rep.balance is None else {"plus": rep.balance[0], "minus": rep.balance[1]},
    }


def flat_rows(d: dict[str, Any]) -> list[dict[str, Any]]:
    """CSV rows for one report dict: one per omega-class for p = 7 mod 12, else one."""
    base = {
        "p": d["p"], "mod12": d["mod12"], "case": d["case"], "g": d["g"], "class_rep": None,
        "n": d["n"], "pi_a": d["pi"]["a"], "pi_b": d["pi"]["b"], "w": d["w"], "r": d["r"], "s": d["s"],
        "delta": d["delta"], "alpha": d["alpha"], "beta": d["beta"], "gamma": d["gamma"], "h": d["h"],
        "actual_sign": d["actual_sign"], "exponent": None, "formula_sign": None, "agrees": None,
        "plus": d["balance"]["plus"] if d["balance"] else None,
        "minus": d["balance"]["minus"] if d["balance"] else None,
    }
    if not d["formula"]:
        return [base]
    rows = []
    for f in d["formula"]:
        row = dict(base)
        row.update(
            class_rep=f["class_rep"], pi_a=f["pi"]["a"], pi_b=f["pi"]["b"], w=f["w"], r=f["r"], s=f["s"],
            beta=f["beta"], gamma=f["gamma"], exponent=f["exponent"], formula_sign=f["sign"],
            agrees=int(f["agrees"]),
        )
        rows.append(row)
    return rows


def summary_to_dict(summary: RangeSummary) -> dict[str, Any]:
    return {
        "p_min": summary.p_min,
        "p_max": summary.p_max,
        "scope": summary.scope,
        "primes": [o.p for o in summary.outcomes],
        "ok": summary.ok,
        "checks": {
            name: {"passed": t.passed, "failed": t.failed, "failures": t.failures}
            for name, t in summary.tallies.items()
        },
        "errors": summary.errors,
        "agreement": summary.agreement(),
    }


def render_json(summary: RangeSummary) -> str:
    doc = {"rows": [report_to_dict(r) for r in summary.reports], "summary": summary_to_dict(summary)}
    return json.dumps(doc, indent=2) + "\n"


def render_csv(summary: RangeSummary) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rep in summary.reports:
        for row in flat_rows(report_to_dict(rep)):
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


def _fmt_sign(x: int | None) -> str:
    return "?" if x is None else f"{x:+d}"


def render_text(summary: RangeSummary) -> str:
    out = []
    for rep in summary.reports:
        ctx = rep.ctx
        c = ctx.counts
        out.append(
            f"p={rep.p} (mod 12 = {rep.mod12}, case {rep.case}) g={ctx.g} n={ctx.n} pi={ctx.pi} w={ctx.w} "
            f"r={ctx.r} s={ctx.s} delta={c.delta} alpha={c.alpha} beta={c.beta} gamma={c.gamma} "
            f"h={'-' if ctx.h is None else ctx.h} sign={_fmt_sign(rep.actual_sign)}"
        )
        if rep.balance:
            out.append(f"    balance: +1 x {rep.balance[0]}, -1 x {rep.balance[1]}")
        for row in rep.classes:
            verdict = "agrees" if row.agrees else "DISAGREES"
            out.append(
                f"    class of g={row.class_rep} ({row.class_size} roots): r={row.r} s={row.s} gamma={row.gamma} "
                f"exponent={_exponent(row.exponent)} formula={_fmt_sign(row.formula_sign)} {verdict}"
            )
    if out:
        out.append("")
    primes = summary.outcomes
    out.append(f"scope={summary.scope} range=[{summary.p_min}, {summary.p_max}] primes={len(primes)}")
    for name, t in summary.tallies.items():
        if t.passed or t.failed:
            status = "PASS" if not t.failed else "FAIL"
            out.append(f"  {status} {name}: {t.passed} passed, {t.failed} failed")
            out.extend(f"      {msg}" for msg in t.failures[:5])
    for err in summary.errors:
        out.append(f"  ERROR {err}")
    agr = summary.agreement()
    if agr["primes"]:
        out.append(
            f"  closed-form agreement over {agr['primes']} primes = 7 mod 12: "
            f"first class {agr['first_class']}, second class {agr['second_class']}, "
            f"both {agr['both']}, neither {agr['neither']}, non-integral exponents {agr['anomalies']}"
        )
    return "\n".join(out) + "\n"


RENDERERS = {"text": render_text, "csv": render_csv, "json": render_json}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which means "check failed" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubeperm", description="Audit the sign of the cube permutation s_p(g).")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    rp = sub.add_parser("report", help="full context and audit rows for one prime")
    rp.add_argument("p", type=int)
    rp.add_argument("--g", type=int, default=None, help="primitive root (default: smallest)")
    rp.add_argument("--format", choices=RENDERERS, default="text")

    vp = sub.add_parser("verify", help="run check suites over a range of primes")
    vp.add_argument("--scope", choices=SCOPES, default="all")
    vp.add_argument("--max-p", type=int, default=1000)
    vp.add_argument("--min-p", type=int, default=5)
    vp.add_argument("--format", choices=RENDERERS, default="text")
    vp.add_argument("--jobs", type=int, default=1)
    vp.add_argument("--out", default=None, help="write output here instead of stdout")
    vp.add_argument("--no-caps", action="store_true", help="ignore per-suite prime bounds")

    sp = sub.add_parser("sign", help="print sign(s_p(g))")
    sp.add_argument("p", type=int)
    sp.add_argument("g", type=int)

    cp = sub.add_parser("classnum", help="print h(-p) for a prime p = 3 mod 4")
    cp.add_argument("p", type=int)
    return parser


def _summary_exit(summary: RangeSummary) -> int:
    return EXIT_OK if summary.ok else EXIT_CHECK_FAILED


def cmd_report(p: int, g: int | None, fmt: str) -> tuple[str, int]:
    require_one_mod_three(p)
    if p <= 3:
        raise CubePermError("p must exceed 3")
    if g is not None and not is_primitive_root(g, p):
        raise NotPrimitiveRoot(f"{g} is not a primitive root mod {p}")
    outcome = audit_one(p, "all", caps=False, g=g)
    summary = summarize(p, p, "all", [outcome])
    return RENDERERS[fmt](summary), _summary_exit(summary)


def cmd_verify(scope: str, p_max: int, fmt: str, jobs: int, p_min: int = 5, caps: bool = True) -> tuple[str, int]:
    if jobs < 1:
        raise CubePermError("--jobs must be at least 1")
    summary = audit_range(p_min, p_max, scope, jobs=jobs, caps=caps)
    return RENDERERS[fmt](summary), _summary_exit(summary)


def cmd_sign(p: int, g: int) -> str:
    return f"{sign_s_p(p, g):+d}\n"


def cmd_classnum(p: int) -> str:
    return f"{binform.class_number(p)}\n"


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    code = EXIT_OK
    try:
        if args.command == "report":
            text, code = cmd_report(args.p, args.g, args.format)
        elif args.command == "verify":
            text, code = cmd_verify(args.scope, args.max_p, args.format, args.jobs, args.min_p, not args.no_caps)
        elif args.command == "sign":
            text = cmd_sign(args.p, args.g)
        else:
            text = cmd_classnum(args.p)
    except CubePermError as exc:
        print(f"cubeperm {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
