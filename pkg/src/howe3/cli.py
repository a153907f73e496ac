"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (bad input, singular curves,
oversized parameters), 2 on invariant violations such as a point count outside
the Hasse-Weil interval or a failed selftest.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .classify import LABEL_ORDER
from .errors import HoweError, InvariantViolation
from .field_tower import make_ctx
from .point_count import MAX_FIELD_SIZE, TwistSpec, count_hyperelliptic, twist_verdict, verify_superspecial_count


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are domain errors here; status 2 is reserved for invariant violations
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _field_meta(ctx) -> dict:
    return ctx.to_json()


def _emit(obj, out):
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


# --- subcommands ----------------------------------------------------------------

def cmd_check(args, out):
    from .standard_form import CurveAB, legendre_triple_of

    ctx = make_ctx(args.p, 2)
    c = CurveAB(ctx(args.a), ctx(args.b))
    c.require_nonsingular()
    lt = legendre_triple_of(c)
    report = verify_superspecial_count(c)
    count = report.count or count_hyperelliptic(c.octic, 1, ctx)
    _emit({
        "field": _field_meta(ctx),
        "a": str(c.a), "b": str(c.b),
        "nonsingular": True,
        "superspecial": report.applicable,
        "legendre": {
            "field": _field_meta(lt.lambda1.ctx),
            "lambdas": [str(x) for x in lt.lambdas],
            "sqrt_lambdas": [str(lt.sqrt_lambda1), str(lt.sqrt_lambda2)],
        },
        "count": count.to_json(),
        "verdict": count.verdict.value,
        "predicted": report.predicted.value if report.predicted else None,
        "agrees": report.agrees,
        "quotient_verdicts": [v.value for v in report.quotient_verdicts],
    }, out)


def cmd_enumerate(args, out):
    from .enumeration import enumerate_brute, enumerate_structured

    labels = args.p > 7
    fn = enumerate_brute if args.oracle else enumerate_structured
    records = fn(args.p, labels=labels)
    _emit({
        "field": _field_meta(make_ctx(args.p, 2)),
        "method": "brute" if args.oracle else "structured",
        "labels": labels,
        "classes": [r.to_json() for r in records],
    }, out)


def render_table(rows, fmt: str) -> str:
    labels = [g.value for g in LABEL_ORDER]
    if fmt == "json":
        return json.dumps({"rows": [{
            "p": r.p, "field": _field_meta(make_ctx(r.p, 2)),
            "counts": {g.value: r.counts[g] for g in LABEL_ORDER},
            "total": r.total, "zero": r.total == 0,
        } for r in rows]}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", *labels, "total"])
        for r in rows:
            w.writerow([r.p, *(r.counts[g] for g in LABEL_ORDER), r.total])
        return buf.getvalue()
    shown = [r for r in rows if r.total]
    lines = ["| G | " + " | ".join(str(r.p) for r in shown) + " |",
             "|---|" + "---|" * len(shown)]
    for g in LABEL_ORDER:
        lines.append(f"| {g.value} | " + " | ".join(str(r.counts[g]) for r in shown) + " |")
    return "\n".join(lines) + "\n"


def cmd_table(args, out):
    from .enumeration import table

    pos = list(args.range)
    if len(pos) > 3:
        raise HoweError("table takes at most PMIN PMAX FORMAT")
    fmt = args.format or (pos.pop() if len(pos) == 3 or (pos and not pos[-1].isdigit()) else "md")
    if fmt not in ("json", "csv", "md"):
        raise HoweError(f"unknown format {fmt!r}; use json, csv or md")
    try:
        bounds = [int(x) for x in pos]
    except ValueError:
        raise HoweError(f"bad prime range {pos}") from None
    pmin = args.pmin if args.pmin is not None else bounds[0] if bounds else 8
    pmax = args.pmax if args.pmax is not None else bounds[1] if len(bounds) > 1 else 99
    out.write(render_table(table(pmin, pmax), fmt))


def cmd_howe(args, out):
    from .howe import (HoweInput, classify_genus, is_hyperelliptic_D, is_hyperelliptic_mu, lambda3,
                       lambda3_hyperelliptic, mu_quadratic)

    ctx = make_ctx(args.p, args.k)
    h = HoweInput(ctx(args.l1), ctx(args.l2), ctx(args.mu))
    g = classify_genus(h)
    result = {"field": _field_meta(ctx), "genus_class": g.to_json()}
    if g.overlap == 2:
        l3 = lambda3(h)
        result["lambda3"] = str(l3)
        result["hyperelliptic_mu"] = is_hyperelliptic_mu(h)
        result["hyperelliptic_D"] = is_hyperelliptic_D(h.lambda1, h.lambda2, l3)
        result["mu_quadratic"] = mu_quadratic(h.lambda1, h.lambda2, l3).to_json()
        vals = lambda3_hyperelliptic(h.lambda1, h.lambda2)
        result["hyperelliptic_lambda3"] = [{"value": str(v), "k": v.ctx.k} for v in vals]
    else:
        result["lambda3"] = None
    _emit(result, out)


def cmd_twist(args, out):
    from .standard_form import CurveAB

    if args.e < 1:
        raise HoweError("e must be a positive integer")
    if args.p ** (2 * args.e) > MAX_FIELD_SIZE:
        raise HoweError(f"p^(2e) must stay below {MAX_FIELD_SIZE}")
    ctx = make_ctx(args.p, 2)
    big = make_ctx(args.p, 2 * args.e)
    c = CurveAB(ctx(args.a), ctx(args.b))
    rep = twist_verdict(c, TwistSpec(big(args.eps), args.e))
    _emit({"field": _field_meta(big), "a": str(c.a), "b": str(c.b), "eps": args.eps,
           **rep.to_json()}, out)


def cmd_selftest(args, out):
    from .acceptance import run_all

    results = run_all(args.tier, stream=out)
    failed = [r for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} criteria passed\n")
    if failed:
        raise InvariantViolation(f"{len(failed)} acceptance criteria failed")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="howe3", description="Genus-3 hyperelliptic Howe curves over F_{p^2}. "
                 "Elements are written c0+c1*t+c2*t^2+... in the tower field's basis.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="analyse y^2 = (x^4 - a x^2 + 1)(x^4 - b x^2 + 1) over F_{p^2}")
    s.add_argument("p", type=int)
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("enumerate", help="superspecial isomorphism classes at one prime")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="use the brute-force scan (p <= 31)")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("table", help="class counts per automorphism group, 7 < pmin <= pmax < 1000")
    s.add_argument("range", nargs="*", help="optional positional PMIN PMAX [FORMAT]")
    s.add_argument("--pmin", type=int)
    s.add_argument("--pmax", type=int)
    s.add_argument("--format", choices=["json", "csv", "md"])
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("howe", help="genus, lambda3 and hyperellipticity of a Howe curve")
    s.add_argument("p", type=int)
    s.add_argument("l1")
    s.add_argument("l2")
    s.add_argument("mu")
    s.add_argument("--k", type=int, default=2, choices=[1, 2, 4, 8], help="field degree for the inputs")
    s.set_defaults(func=cmd_howe)

    s = sub.add_parser("twist", help=f"count eps y^2 = f over F_(p^(2e)); requires p^(2e) <= {MAX_FIELD_SIZE}")
    s.add_argument("p", type=int)
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("eps", help="element of F_{p^(2e)}")
    s.add_argument("e", type=int, choices=[1, 2, 4])
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("selftest", help="run the acceptance criteria")
    s.add_argument("tier", nargs="?", default="fast", choices=["fast", "slow"])
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=err)
        return 2
    except (HoweError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    return 0


def _entry():
    sys.exit(main())


if __name__ == "__main__":
    _entry()
