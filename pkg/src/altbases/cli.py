"""Command-line front end.

Subcommands: ``eval``, ``identities``, ``count``, ``conjecture``, ``discover``.
Exit codes: 0 success, 1 verification failure, 2 usage error,
3 precision-inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import algebraic as alg
from . import conjectures as cj
from . import counting as cnt
from . import elliptic as el
from . import identities as ids
from . import theta as th
from .lattice import InconclusiveError
from .precision import PrecisionContext, format_real, series_plan
from .report import build_report, case_record, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

EVAL_TARGETS = ("a0", "b0", "c0", "theta2", "theta3", "theta4", "form_theta", "alpha", "beta",
                "lambda", "Q", "j", "K", "k_r", "S")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational {text!r}") from exc
    return value


def parse_grid(text: str) -> list[Fraction]:
    return [parse_rational(t) for t in text.split(",") if t.strip()]


def parse_ints(text: str, n: int | None = None) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} integers, got {text!r}")
    return vals


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=60, help="decimal digits (default 60)")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--grid", type=str, default=None, help="comma-separated rationals r")

    p = _Parser(prog="altbases", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", parents=[common], help="evaluate one quantity")
    e.add_argument("target", choices=EVAL_TARGETS)
    e.add_argument("--r", type=str, default="1")
    e.add_argument("--form", type=str, default=None, help="a,b,c")
    e.add_argument("--D", type=int, default=None)
    e.add_argument("--x", type=str, default=None, help="modulus x for S, K, Q (rational)")

    i = sub.add_parser("identities", parents=[common], help="run the identity catalog")
    i.add_argument("--only", type=str, default=None, help="ID[,ID...]")

    c = sub.add_parser("count", parents=[common], help="representation counts")
    c.add_argument("--form", type=str, required=True, help="a,b,c")
    c.add_argument("--n", type=int, default=20)
    c.add_argument("--quaternary", action="store_true")

    cj_ = sub.add_parser("conjecture", parents=[common], help="check a printed u-v polynomial")
    cj_.add_argument("--D", type=int, required=True)

    d = sub.add_parser("discover", parents=[common], help="search for a u-v polynomial")
    d.add_argument("--D", type=int, required=True)
    d.add_argument("--deg", type=str, required=True, help="du,dv")
    d.add_argument("--form", type=str, default=None)
    return p


def _ctx(args) -> PrecisionContext:
    if args.precision < 15:
        raise UsageError("--precision must be at least 15")
    return PrecisionContext(args.precision)


def _form_arg(text, D=None):
    if text is None:
        if D is None:
            raise UsageError("--form or --D is required")
        if D not in cnt.PRINCIPAL_FORMS:
            raise UsageError(f"no principal form on file for D={D}; pass --form")
        return th.QuadraticForm(*cnt.PRINCIPAL_FORMS[D])
    Q = th.QuadraticForm(*parse_ints(text, 3))
    if not Q.positive_definite:
        raise UsageError(f"form {text} is not positive definite")
    return Q


def cmd_eval(args) -> tuple[dict, int]:
    ctx = _ctx(args)
    r = parse_rational(args.r)
    if r <= 0:
        raise UsageError("r must be positive")
    q = ctx.nome(r)
    t = args.target
    N = series_plan(q, ctx.work_eps / 10, ctx=ctx)
    formula = ""
    if t == "a0":
        val, formula = th.borwein_a(q, ctx), "lattice sum of q^(m^2+mn+n^2)"
    elif t == "b0":
        val, formula = th.borwein_b(q, ctx), "lattice sum with weights w^(m-n)"
    elif t == "c0":
        val, formula = th.borwein_c(q, ctx), "shifted lattice sum (m+1/3, n+1/3)"
    elif t in ("theta2", "theta3", "theta4"):
        val, formula = th.theta_null(int(t[-1]), q, ctx), f"theta_{t[-1]} series"
    elif t == "form_theta":
        Q = _form_arg(args.form, args.D)
        val, formula = th.form_theta(Q, q, ctx), f"lattice sum of {Q.as_tuple()}"
    elif t == "alpha":
        val, formula = el.alpha(r, ctx), "(c(q1)/a(q1))^3, q1 = exp(-pi sqrt(4r/3))"
    elif t == "beta":
        val, formula = el.beta(r, ctx), "from alpha(3r)"
    elif t == "lambda":
        val, formula = alg.lambda_r(r, ctx).lam, "sqrt(-Q'(k^2)/Q(k^2))"
    elif t == "Q":
        v = parse_rational(args.x) if args.x else None
        val = alg.eval_Q(v if v is not None else el.singular_modulus(r, ctx).k ** 2, ctx)
        formula = "theta branch of the quartic P(u, v) = 0"
    elif t == "j":
        val, formula = alg.j_invariant(r, ctx), "256 (1-(kk')^2)^3/(kk')^4"
    elif t == "K":
        k = parse_rational(args.x) if args.x else None
        val = el.elliptic_K(k, ctx) if k is not None else el.singular_modulus(r, ctx).K
        formula = "pi / (2 agm(1, k'))"
    elif t == "k_r":
        val, formula = el.singular_modulus(r, ctx).k, "root of K(k')/K(k) = sqrt(r)"
    elif t == "S":
        if args.x is None:
            raise UsageError("eval S needs --x")
        Q = _form_arg(args.form, args.D)
        val = cj.S_function(Q.D, Q, parse_rational(args.x), ctx)
        formula = f"(pi/2K(x)) theta_{Q.as_tuple()}(q1)"
    record = {
        "id": t,
        "inputs": {"r": str(r), **({"x": args.x} if args.x else {}), **({"form": args.form} if args.form else {})},
        "value": format_real(val, ctx),
        "provenance": f"{formula}; precision={ctx.decimal_digits}; truncation N={N}",
        "verdict": "ok",
    }
    return build_report("eval", ctx, [r], [record]), EXIT_OK


def cmd_identities(args) -> tuple[dict, int]:
    ctx = _ctx(args)
    grid = parse_grid(args.grid) if args.grid else list(ids.DEFAULT_GRID)
    only = [s.strip() for s in args.only.split(",")] if args.only else None
    try:
        cases = ids.run_all(grid, ctx, only)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    failed = any(c.counts_as_failure for c in cases)
    return build_report("identities", ctx, grid, [case_record(c, ctx) for c in cases]), (
        EXIT_FAIL if failed else EXIT_OK)


def cmd_count(args) -> tuple[dict, int]:
    ctx = _ctx(args)
    Q = _form_arg(args.form)
    rows = cnt.count_table(Q, args.n, quaternary=args.quaternary)
    recs = []
    for row in rows:
        recs.append({
            "id": "s(n)" if args.quaternary else "r(n)",
            "inputs": {"form": args.form, "n": row.n},
            "brute": row.brute,
            "formula": row.formula if row.formula is not None else "no formula in scope",
            "verdict": {True: "match", False: "mismatch", None: "n/a"}[row.match],
        })
    code = EXIT_FAIL if any(r.match is False for r in rows) else EXIT_OK
    return build_report("count", ctx, [], recs), code


def _require_conjecture_precision(ctx):
    if ctx.decimal_digits < 30:
        raise UsageError("conjecture commands need --precision >= 30")


def cmd_conjecture(args) -> tuple[dict, int]:
    ctx = _ctx(args)
    _require_conjecture_precision(ctx)
    if args.D not in cj.CONJECTURES:
        raise UsageError(f"no conjectured polynomial for D={args.D}; supported {sorted(cj.CONJECTURES)}")
    grid = parse_grid(args.grid) if args.grid else list(ids.DEFAULT_GRID)
    rep = cj.verify_uv_relation(args.D, grid, ctx)
    verdict = rep.verdict
    if rep.note and verdict != "pass":
        verdict = "flagged"
    rec = {
        "id": f"D={args.D}",
        "inputs": {"D": args.D},
        "convention": rep.convention.name,
        "max_residual": format_real(rep.max_residual, ctx, 6),
        "residual": format_real(rep.max_residual, ctx, 6),
        "verdict": verdict,
        "best_convention": rep.best_convention,
        "note": rep.note,
        "polynomial": str(cj.CONJECTURES[args.D]),
    }
    if rep.alternates:
        rec["alternates"] = {k: format_real(v, ctx, 6) for k, v in rep.alternates.items()}
    code = EXIT_OK if verdict in ("pass", "flagged") else EXIT_FAIL
    return build_report("conjecture", ctx, grid, [rec]), code


def cmd_discover(args) -> tuple[dict, int]:
    ctx = _ctx(args)
    _require_conjecture_precision(ctx)
    du, dv = parse_ints(args.deg, 2)
    if args.D >= 0:
        raise UsageError("D must be negative")
    Q = _form_arg(args.form, args.D)
    if Q.D != args.D:
        raise UsageError(f"form {Q.as_tuple()} has discriminant {Q.D}, not {args.D}")
    poly = cj.discover_bivariate(args.D, (du, dv), ctx=ctx, form=Q)
    rec = {
        "id": f"D={args.D}",
        "inputs": {"D": args.D, "degrees": f"{du},{dv}", "form": ",".join(map(str, Q.as_tuple()))},
        "polynomial": str(poly) if poly is not None else "none",
        "variables": "u = S(x)^2, v = x^2",
        "verdict": "found" if poly is not None else "none",
    }
    if poly is not None and args.D in cj.CONJECTURES:
        rec["matches_printed"] = poly.proportional_to(cj.CONJECTURES[args.D])
    return build_report("discover", ctx, [], [rec]), EXIT_OK if poly is not None else EXIT_FAIL


COMMANDS = {
    "eval": cmd_eval,
    "identities": cmd_identities,
    "count": cmd_count,
    "conjecture": cmd_conjecture,
    "discover": cmd_discover,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    sys.stdout.write(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
