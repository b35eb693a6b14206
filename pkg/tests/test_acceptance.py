"""Acceptance criteria, each run at its stated tolerance.

Every criterion is a function ``ctx -> (ok, detail)``; the tests record one
PASS/FAIL line per criterion (shown in the terminal summary) and criterion 8
reruns 1-7 at 80 digits and compares verdicts.
"""

import time
from fractions import Fraction

import pytest

from altbases import algebraic as alg
from altbases import conjectures as cj
from altbases import counting as cnt
from altbases import elliptic as el
from altbases import identities as ids
from altbases import theta as th
from altbases.lattice import minimal_polynomial_of_value
from altbases.precision import PrecisionContext

from conftest import ACCEPTANCE_LINES, GRID

SERIES_IDS = ["I-06", "I-07", "I-09", "I-11", "I-12", "I-14", "I-15", "I-16", "I-19", "I-23", "I-24",
              "I-42", "I-50", "I-54", "I-69"]
ROOT_IDS = ["I-32", "I-33", "I-36", "I-37", "I-38", "I-40", "I-44", "I-56"]
CLASS_ONE = (-3, -4, -7, -8, -11, -19, -43, -67, -163)


def _rel(x, y):
    return abs(x - y) / max(abs(y), 1)


def c1(ctx):
    t = time.perf_counter()
    mp = ctx.mp
    a = th.borwein_a(ctx.nome(1), ctx)
    K = el.elliptic_K(1 / mp.sqrt(2), ctx)
    gamma_sq = 8 * ctx.pi ** mp.mpf(1.5) / K
    closed = 8 * mp.sqrt(2 * ctx.pi * (mp.sqrt(24 + 14 * mp.sqrt(3)) - 3)) / (mp.root(3, 4) * gamma_sq)
    err = _rel(a, closed)
    dt = time.perf_counter() - t
    return err < 1e-40 and dt < 5, f"rel err {mp.nstr(err, 3)}, {dt:.2f}s"


def c2(ctx):
    mp = ctx.mp
    s3 = mp.sqrt(3)
    Q = 81 * (885 + 511 * s3 - 3 * mp.sqrt(174033 + 100478 * s3))
    Qp = 162 * (5082 + 2934 * s3 - mp.sqrt(51655599 + 29823374 * s3))
    e1 = _rel(alg.eval_Q(Fraction(1, 2), ctx), Q)
    e2 = _rel(alg.eval_Qprime(Fraction(1, 2), ctx), Qp)
    return max(e1, e2) < 1e-40, f"Q err {mp.nstr(e1, 3)}, Q' err {mp.nstr(e2, 3)}"


def _c3_cases(ctx, root_ids):
    t = time.perf_counter()
    series = ids.run_all(GRID, ctx, only=SERIES_IDS)
    roots = ids.run_all(GRID, ctx, only=root_ids)
    dt = time.perf_counter() - t
    ms = max(c.residual for c in series)
    mr = max(c.residual for c in roots)
    bad = sorted({c.id for c in series if not c.residual < 1e-40} | {c.id for c in roots if not c.residual < 1e-30})
    ok = not bad and dt < 300
    return ok, f"series max {ctx.mp.nstr(ms, 3)}, root-chain max {ctx.mp.nstr(mr, 3)}, failing {bad or 'none'}, {dt:.1f}s"


def c3(ctx):
    return _c3_cases(ctx, ROOT_IDS)


def c3_without_i40(ctx):
    return _c3_cases(ctx, [i for i in ROOT_IDS if i != "I-40"] + ["I-40c"])


def c4(ctx):
    t = time.perf_counter()
    N = 500
    bad = []
    r3 = cnt.binary_count_table((1, 1, 1), N)
    if any(r3[n] != cnt.divisor_formula_r3(n) for n in range(1, N + 1)):
        bad.append("r3")
    for D in (-3, -4, -7):
        s = cnt.quaternary_count_table(cnt.PRINCIPAL_FORMS[D], N)
        if any(s[n] != cnt.divisor_formula_s(n, D) for n in range(1, N + 1)):
            bad.append(f"s D={D}")
    for D in th.CLASS_ONE_ODD:
        r = cnt.binary_count_table(cnt.PRINCIPAL_FORMS[D], N)
        if any(r[n] != cnt.divisor_formula_class1(n, D) for n in range(1, N + 1)):
            bad.append(f"class1 D={D}")
    dt = time.perf_counter() - t
    return not bad and dt < 60, f"mismatches {bad or 'none'}, {dt:.2f}s"


def c5(ctx):
    reps = {D: cj.verify_uv_relation(D, GRID, ctx) for D in (-4, -8, -12, -16, -20, -24, -28, -40)}
    convs = {r.convention.name for r in reps.values()}
    main_ok = all(r.verdict == "pass" and r.max_residual < 1e-35 for r in reps.values()) and len(convs) == 1
    d32, d36 = cj.verify_uv_relation(-32, GRID, ctx), cj.verify_uv_relation(-36, GRID, ctx)
    passing = [D for D, r in ((-32, d32), (-36, d36)) if r.verdict == "pass"]
    dup_ok = bool(d32.note and d36.note) and len(passing) <= 1
    worst = max(r.max_residual for r in reps.values())
    dup = f"D={passing[0]} passes" if passing else "both fail"
    return main_ok and dup_ok, f"max {ctx.mp.nstr(worst, 3)} under {convs.pop()}; duplicate: {dup}"


def _lam_value(c, power):
    K = el.singular_modulus(1, c).K
    return c.pi**power * th.borwein_a(c.nome(1), c) ** 2 / K**2


def _c6(ctx, power):
    poly = cj.discover_bivariate(-8, (2, 1), ctx=ctx)
    found_poly = poly is not None and poly.proportional_to(cj.CONJECTURES[-8])
    res = minimal_polynomial_of_value(lambda c: _lam_value(c, power), 8, 12, ctx)
    if res is None:
        return False, f"D=-8 polynomial {'recovered' if found_poly else 'missing'}; no relation of degree <= 8"
    coeffs, rel = res
    ok = found_poly and len(coeffs) - 1 <= 8 and rel.improvement_digits >= 20
    return ok, (f"D=-8 polynomial {poly}; minimal polynomial {coeffs}, "
                f"improvement {rel.improvement_digits:.0f} digits")


def c6(ctx):
    return _c6(ctx, 1)


def c6_pi_squared(ctx):
    return _c6(ctx, 2)


def c7(ctx):
    rows = [ids.run_identity("I-10", ctx, r=r) for r in GRID]
    reported = all(c.residual >= 0 and "residual_alpha_3_over_r" in c.notes for c in rows)
    mp = ctx.mp
    i10 = ", ".join(f"r={c.inputs['r']}: {mp.nstr(c.residual, 3)} / {mp.nstr(c.notes['residual_alpha_3_over_r'], 3)}"
                    for c in rows)
    probe = cnt.lemma_equivalence_probe((1, 0, 5), (2, 2, 3), 200)
    agree = []
    for D in CLASS_ONE:
        a, b, c = cnt.PRINCIPAL_FORMS[D]
        for other in ((c, b, a), (a, b + 2 * a, a + b + c)):
            agree.append(cnt.lemma_equivalence_probe((a, b, c), other, 200).agree)
    ok = reported and not probe.agree and all(agree)
    return ok, f"I-10 residual (1-alpha / alpha(3/r)): {i10}; D=-20 {probe.describe()}; class one agree {all(agree)}"


CRITERIA = {"1": c1, "2": c2, "3": c3, "4": c4, "5": c5, "6": c6, "7": c7}
EXTRA = {"3 (I-40 replaced by its X = 4x reading)": c3_without_i40, "6 (pi^2 a0^2 / K^2)": c6_pi_squared}
EXPECTED_RED = {
    "3": "I-40 as stated holds only at r = 1; see notes/decisions.md",
    "6": "pi a0^2 / K^2 equals an algebraic number over pi; see notes/decisions.md",
}

_cache: dict = {}


def outcome(name, digits):
    key = (name, digits)
    if key not in _cache:
        fn = CRITERIA.get(name) or EXTRA[name]
        _cache[key] = fn(PrecisionContext(digits))
    return _cache[key]


def record(name, ok, detail):
    line = f"criterion {name}: {'PASS' if ok else 'FAIL'} | {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def _check(name, expected_red=None):
    ok, detail = outcome(name, 60)
    record(name, ok, detail)
    if not ok and expected_red:
        pytest.xfail(expected_red)
    assert ok, detail


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name):
    _check(name, EXPECTED_RED.get(name))


@pytest.mark.parametrize("name", list(EXTRA))
def test_criterion_companion(name):
    _check(name)


def test_criterion_8():
    flips = []
    for name in CRITERIA:
        lo, hi = outcome(name, 60)[0], outcome(name, 80)[0]
        if lo != hi:
            flips.append(name)
    ok = not flips
    record("8", ok, f"verdicts at 80 digits identical to 60 digits; differing {flips or 'none'}")
    assert ok
