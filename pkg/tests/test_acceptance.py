"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines are printed with
capture disabled) or ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from gen import random_complex, rng_for  # noqa: E402
from test_ffgeom import ELLIPTIC, brute_elliptic  # noqa: E402

from lfunc.coeffalg import AbelianGroupRing, IntegerRing, is_l_adic_unit  # noqa: E402
from lfunc.cohom import (  # noqa: E402
    NORMALIZATION,
    calibrate_normalization,
    charfrac,
    complex_semisimple_at_zero,
    fiber_complex,
    verify_special_value_theorem,
    weil_etale_zero_dim,
)
from lfunc.errors import InsufficientPrecisionError, NoSolutionError  # noqa: E402
from lfunc.exactalg import RationalFunction, TruncatedSeries  # noqa: E402
from lfunc.exactalg import poly as P  # noqa: E402
from lfunc.exactalg.series import series_exp_log_counts  # noqa: E402
from lfunc.ffgeom import Variety, affine_space, count_points, get_field, projective_space, spec_extension  # noqa: E402
from lfunc.lseries import (  # noqa: E402
    compute_lfunction,
    distinguished_product_check,
    euler_product,
    reconstruct,
    special_value,
    weierstrass_prepare,
)
from lfunc.scenario import scenario_from_dict  # noqa: E402
from lfunc.sheaves import Constant, CoverPushforward, ZeroDimCover  # noqa: E402

# Pinned budgets and sizes.
ZETA_PRECISION = 8
GUARD = 3
T_ZETA = 5.0
T_CURVE = 30.0
T_ARTIN = 60.0
T_ZERO_DIM = 10.0
T_ORACLE = 60.0
N_ORACLE = 200
N_EQUIV = 100
N_WEIERSTRASS = 50
W_MOD_EXP = 6
W_T_PREC = 9  # coefficients of T^0..T^9, i.e. mod T^10

RESULTS = {}


def report(n, name, ok, detail=""):
    RESULTS[n] = ok
    line = f"CRITERION {n:>2} {'PASS' if ok else 'FAIL'}: {name}"
    if detail:
        line += f" ({detail})"
    return line


def emit(capsys, line):
    if capsys is False:
        return
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def rf(num, den):
    return RationalFunction(tuple(num), tuple(den))


# --- 1 ----------------------------------------------------------------------

def suite1():
    cases = []
    for q in (2, 3, 5):
        F = get_field(q, 1)
        cases.append((f"P1/F{q}", projective_space(F, 1), rf([1], [1, -(q + 1), q])))
        cases.append((f"A1/F{q}", affine_space(F, 1), rf([1], [1, -q])))
    return cases


def criterion_1(capsys=None):
    ok, worst = True, 0.0
    for name, v, expected in suite1():
        t = time.perf_counter()
        (s,) = euler_product(Constant(), v, N=ZETA_PRECISION)
        (f,), _ = reconstruct([s], "auto", GUARD)
        dt = time.perf_counter() - t
        worst = max(worst, dt)
        ok = ok and f == expected and dt < T_ZETA
    emit(capsys, report(1, "zeta reconstruction of P1, A1 over F2, F3, F5", ok, f"slowest {worst:.2f}s"))
    return ok


# --- 2 ----------------------------------------------------------------------

def criterion_2(capsys=None):
    t = time.perf_counter()
    E = Variety(get_field(5, 1), "projective", 2, [ELLIPTIC], variables=["x", "y", "z"])
    (s,) = euler_product(Constant(), E, N=ZETA_PRECISION)
    (f,), _ = reconstruct([s], [(2, 2)], GUARD)
    n1, n2 = brute_elliptic(1), brute_elliptic(2)
    a = 6 - n1
    ok = f == rf([1, -a, 5], [1, -6, 5])
    # the second count is predicted by a alone
    ok = ok and n2 == 25 + 1 - (a * a - 2 * 5)
    dt = time.perf_counter() - t
    ok = ok and dt < T_CURVE
    emit(capsys, report(2, "elliptic curve over F5 against brute-force N1, N2", ok, f"a={a}, {dt:.2f}s"))
    return ok


# --- 3 ----------------------------------------------------------------------

KUMMER_F = ["x^3 - x", "x^3 + x + 1"]
KUMMER_N = 7


def cover_zeta_series(f, N):
    V = Variety(get_field(5, 1), "affine", 2, [f"y^2 - ({f})"], exclude=[f], variables=["x", "y"])
    return series_exp_log_counts([count_points(V, d) for d in range(1, N + 1)], N)


def criterion_3(capsys=None):
    t = time.perf_counter()
    ok = True
    for f in KUMMER_F:
        sc = scenario_from_dict({
            "schema": "lfunc.scenario/1",
            "field": {"p": 5},
            "order": {"order": "ZG", "cycle_type": [2]},
            "variety": {"kind": "kummer_base"},
            "system": {"kind": "kummer", "m": 2, "num": f},
        })
        series = euler_product(sc.system, sc.variety, sc.spec, N=KUMMER_N)
        funcs, _ = reconstruct(series, [(3, 1), (2, 0)], GUARD)
        prod = funcs[0] * funcs[1]
        ok = ok and prod.expand(KUMMER_N).agrees_with(cover_zeta_series(f, KUMMER_N))
    dt = time.perf_counter() - t
    ok = ok and dt < T_ARTIN
    emit(capsys, report(3, "Artin formalism for two Kummer covers over F5", ok, f"{dt:.2f}s"))
    return ok


# --- 4 and 8 ----------------------------------------------------------------

def zero_dim_suite():
    """Yields (label, q, d, n, spec, verdict, lresult)."""
    for q in (2, 3):
        for d in (1, 2, 3):
            v = spec_extension(get_field(q, 1), d)
            systems = [("Z", Constant(), IntegerRing(), 1)]
            for e in (2, 3):
                G = AbelianGroupRing([e])
                systems.append((f"Z[Z/{e}]", CoverPushforward(ZeroDimCover(d, e)), G, G.group_element(d % e)))
            for label, sys_, spec, Phi in systems:
                ncomp = len(spec.components())
                res = compute_lfunction(sys_, v, spec, N=d + 4, bounds=[(0, d)] * ncomp, guard=GUARD)
                for n in (0, -1, -2):
                    W = weil_etale_zero_dim(d, Phi=Phi, n=n, q=q, spec=spec)
                    lres = special_value(res.functions, W.x)
                    verdict = verify_special_value_theorem(lres, W.fiber(), W.semisimplicity(), spec, W.x)
                    yield f"{label} q={q} d={d} n={n}", q, d, n, spec, verdict, lres


def criterion_4(capsys=None):
    t = time.perf_counter()
    ok, count, bad = True, 0, []
    for label, q, d, n, spec, v, _ in zero_dim_suite():
        count += 1
        good = v.order_ok and v.value_ok and v.passed
        if not isinstance(spec, IntegerRing):
            good = good and v.zlevel_ok
        if not good:
            bad.append(label)
        ok = ok and good
    dt = time.perf_counter() - t
    ok = ok and dt < T_ZERO_DIM
    detail = f"{count} cases, {dt:.2f}s" + (f", failing {bad}" if bad else "")
    emit(capsys, report(4, "zero-dimensional special-value suite", ok, detail))
    return ok


def criterion_8(capsys=None):
    ok, count = True, 0
    for label, q, d, n, spec, v, lres in zero_dim_suite():
        if n >= 0:
            continue
        count += 1
        ok = ok and all(r == 0 for r in lres.orders)
        ok = ok and is_l_adic_unit(lres.values, q)
    emit(capsys, report(8, "negative twists give order 0 and p-adic unit values", ok, f"{count} cases"))
    return ok


# --- 5 ----------------------------------------------------------------------

def semisimple_instances(count, seed=20240601):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        C = random_complex(rng)
        x = rng.choice([1, 2, 3])
        dec = complex_semisimple_at_zero(C, x)
        if dec.ok:
            out.append((C, x, dec))
    return out


def criterion_5(capsys=None):
    t = time.perf_counter()
    fails = 0
    for C, x, dec in semisimple_instances(N_ORACLE):
        F = fiber_complex(C, x)
        lres = special_value(charfrac(C), x)
        v = verify_special_value_theorem(lres, F, dec, x=x)
        if not (v.order_ok and v.identity_ok and v.value_ok):
            fails += 1
    dt = time.perf_counter() - t
    ok = fails == 0 and dt < T_ORACLE
    emit(capsys, report(5, "randomized local-theorem oracle suite", ok, f"{N_ORACLE} instances, {fails} failures, {dt:.2f}s"))
    return ok


# --- 6 ----------------------------------------------------------------------

def criterion_6(capsys=None):
    base = calibrate_normalization(extended=False)
    full = calibrate_normalization(extended=True)
    # diag(1, k) alone has d(alpha) = 1, so it leaves eps' free; the cyclic
    # permutations in the extended family fix it.
    ok = NORMALIZATION in base and full == [NORMALIZATION]
    # criteria 4 and 5 rerun silently under the frozen normalization
    ok = ok and criterion_4(False) and criterion_5(False)
    detail = f"diag family leaves {base}, extended family leaves {full}"
    emit(capsys, report(6, "Burns calibration pins and freezes the normalization", ok, detail))
    return ok


# --- 7 ----------------------------------------------------------------------

def criterion_7(capsys=None):
    rng = rng_for(7)
    agree, failing = 0, 0
    for _ in range(N_EQUIV):
        C = random_complex(rng, jordan=0.5)
        x = rng.choice([1, 1, 2, 3])
        dec = complex_semisimple_at_zero(C, x)
        failing += not dec.ok
        agree += dec.ok == dec.beta0_acyclic
    ok = agree == N_EQUIV and failing > 0
    emit(capsys, report(7, "semisimplicity verdicts agree with beta0 acyclicity", ok, f"{agree}/{N_EQUIV} agree, {failing} non-semisimple"))
    return ok


# --- 9 ----------------------------------------------------------------------

def criterion_9(capsys=None):
    ok, checks = True, 0
    for name, v, expected in suite1():
        (s,) = euler_product(Constant(), v, N=ZETA_PRECISION)
        m, n = len(expected.numerator) - 1, len(expected.denominator) - 1
        coeffs = list(s.coefficients)
        short = TruncatedSeries(coeffs[: m + n + GUARD], m + n + GUARD - 1)
        try:
            reconstruct([short], [(m, n)], GUARD)
            ok = False
        except InsufficientPrecisionError:
            pass
        checks += 1
        for i in range(len(coeffs)):
            bad = list(coeffs)
            bad[i] += 1
            try:
                reconstruct([TruncatedSeries(bad, s.precision)], [(m, n)], GUARD)
                ok = False
            except NoSolutionError:
                pass
            checks += 1
    emit(capsys, report(9, "truncated and corrupted series are rejected", ok, f"{checks} checks"))
    return ok


# --- 10 ---------------------------------------------------------------------

def weierstrass_case(rng, p):
    w = rng.randint(0, 3)
    Pd = [p * rng.randint(-4, 4) for _ in range(w)] + [1]
    u = [rng.randint(1, p - 1) + p * rng.randint(-3, 3)] + [rng.randint(-20, 20) for _ in range(rng.randint(0, 8))]
    return Pd, u, P.mul(Pd, u)


def criterion_10(capsys=None):
    rng = random.Random(10)
    ok = True
    mod_exp, N = W_MOD_EXP, W_T_PREC
    for k in range(N_WEIERSTRASS):
        p = (3, 5)[k % 2]
        Pd, u, f = weierstrass_case(rng, p)
        P2, u2 = weierstrass_prepare(f, p, N, mod_exp)
        mod = p**mod_exp
        ok = ok and len(P2) == len(Pd)
        ok = ok and [c % mod for c in P2] == [c % mod for c in Pd]
        ok = ok and distinguished_product_check(f, P2, u2, p, N, mod_exp)
    emit(capsys, report(10, "Weierstrass preparation recovers P mod p^6", ok, f"{N_WEIERSTRASS} cases"))
    return ok


# --- pytest entry points ----------------------------------------------------

def test_criterion_01(capsys):
    assert criterion_1(capsys)


def test_criterion_02(capsys):
    assert criterion_2(capsys)


def test_criterion_03(capsys):
    assert criterion_3(capsys)


def test_criterion_04(capsys):
    assert criterion_4(capsys)


def test_criterion_05(capsys):
    assert criterion_5(capsys)


def test_criterion_06(capsys):
    assert criterion_6(capsys)


def test_criterion_07(capsys):
    assert criterion_7(capsys)


def test_criterion_08(capsys):
    assert criterion_8(capsys)


def test_criterion_09(capsys):
    assert criterion_9(capsys)


def test_criterion_10(capsys):
    assert criterion_10(capsys)


if __name__ == "__main__":
    checks = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
              criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]
    results = [c() for c in checks]
    sys.exit(0 if all(results) else 1)
