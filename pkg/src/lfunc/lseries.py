"""Euler products, rational reconstruction and special values."""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .coeffalg import CenterElement, reduced_charpoly
from .errors import (
    BranchLocusError,
    ComponentInsufficientPrecision,
    ComponentNoSolution,
    IndeterminateDegreeError,
    InsufficientPrecisionError,
    NoSolutionError,
    NotIntegralError,
)
from .exactalg import poly as P
from .exactalg.numberfield import NFElement
from .exactalg.pade import pade_reconstruct
from .exactalg.series import TruncatedSeries, series_inverse
from .ffgeom.variety import DEFAULT_BUDGET, closed_point_counts, closed_points_up_to, count_points
from .sheaves import stalk_frobenius

DEFAULT_GUARD = 3


def _plain(x):
    """Rational-field elements become Fractions; everything else is kept."""
    if isinstance(x, NFElement) and x.field.degree == 1:
        return x.coeffs[0]
    return x


def local_factor(sys, x, spec=None):
    """Per-component polynomial Nrd(1 - phi_x T^{deg x})."""
    spec = spec or sys.spec
    return _factor_of(stalk_frobenius(sys, x), spec, x.degree)


def _factor_of(m, spec, d):
    return [tuple(_plain(c) for c in poly) for poly in reduced_charpoly(m, spec, d)]


def _constant_factor(sys, spec, d):
    one, zero = spec.one(), spec.zero()
    m = [[one if i == j else zero for j in range(sys.rank)] for i in range(sys.rank)]
    return [tuple(_plain(c) for c in poly) for poly in reduced_charpoly(m, spec, d)]


def _accumulate(factors, ncomp, N):
    """prod f^{-mult} over a Counter of per-component factor tuples."""
    out = []
    for c in range(ncomp):
        den = TruncatedSeries([1], N)
        for fac, mult in sorted(factors.items(), key=lambda kv: repr(kv[0])):
            if mult:
                den = den * TruncatedSeries(list(fac[c]), N) ** mult
        out.append(series_inverse(den))
    return out


def euler_product(sys, v, spec=None, N=8, budget=DEFAULT_BUDGET, cache=None, method="fiber"):
    """prod over closed points of degree <= N of local factors^{-1}, mod T^{N+1}.

    Constant systems only need point counts; every closed point of degree d
    has the same factor, so the closed-point numbers come from Moebius
    inversion of N_1..N_N.
    """
    spec = spec or sys.spec
    ncomp = len(spec.components())
    factors = Counter()
    if sys.is_constant():
        counts = [count_points(v, e, budget=budget, method=method, cache=cache) for e in range(1, N + 1)]
        for d, c in enumerate(closed_point_counts(counts), start=1):
            if c:
                factors[tuple(_constant_factor(sys, spec, d))] += c
        return _accumulate(factors, ncomp, N)
    # points sharing a degree and a stalk matrix share a factor
    by_matrix = Counter()
    for x in closed_points_up_to(v, N, budget=budget, method=method):
        if sys.is_excluded(x):
            if sys.excludes_branch_locus:
                continue
            raise BranchLocusError(f"closed point {x.coords} is excluded by the system")
        m = stalk_frobenius(sys, x)
        by_matrix[(x.degree, tuple(tuple(row) for row in m))] += 1
    for (d, m), mult in by_matrix.items():
        factors[tuple(_factor_of([list(r) for r in m], spec, d))] += mult
    return _accumulate(factors, ncomp, N)


def _reconstruct_one(s, bound, guard):
    if bound == "auto":
        cap = (s.precision - guard) // 2
        tries = []
        b = 1
        while b <= cap:
            tries.append(b)
            b *= 2
        if cap >= 1 and cap not in tries:
            tries.append(cap)
        last = None
        for b in tries:
            try:
                return pade_reconstruct(s, b, b, guard), (b, b)
            except NoSolutionError as exc:
                last = exc
        if last is None:
            raise InsufficientPrecisionError(f"precision {s.precision} too small for auto bounds with guard {guard}")
        raise last
    m, n = bound
    return pade_reconstruct(s, m, n, guard), (m, n)


def reconstruct(series, bounds="auto", guard=DEFAULT_GUARD):
    """Componentwise Pade reconstruction.

    ``bounds`` is ``"auto"`` or a list with one ``(deg_num, deg_den)`` (or
    ``"auto"``) per component.  Returns ``(functions, bounds_used)``.
    """
    if bounds == "auto" or isinstance(bounds, tuple):
        bounds = [bounds] * len(series)
    if len(bounds) != len(series):
        raise ValueError(f"expected {len(series)} bounds, got {len(bounds)}")
    funcs, used = [], []
    for i, (s, b) in enumerate(zip(series, bounds)):
        try:
            f, u = _reconstruct_one(s, b, guard)
        except InsufficientPrecisionError as exc:
            raise ComponentInsufficientPrecision(i, exc) from exc
        except NoSolutionError as exc:
            raise ComponentNoSolution(i, exc) from exc
        funcs.append(f)
        used.append(u)
    return funcs, used


@dataclass
class LFunctionResult:
    series: list
    functions: list
    bounds: list
    guard: int
    precision: int = 0

    def check(self):
        return all(f.expand(s.precision).agrees_with(s) for f, s in zip(self.functions, self.series))


@dataclass
class SpecialValueReport:
    x: Fraction
    orders: tuple
    values: CenterElement
    cofactors: list = field(default_factory=list, repr=False)


def special_value_component(f, x):
    """(r, L*) with f = (x - T)^r g and L* = g(x) != 0."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("special values are taken at x != 0")
    if not f.numerator:
        raise ValueError("the zero function has no special value")
    a, n1 = P.linear_factor_multiplicity(f.numerator, x)
    b, d1 = P.linear_factor_multiplicity(f.denominator, x)
    r = a - b
    # (T - x)^k = (-1)^k (x - T)^k
    value = P.evaluate(n1, x) / P.evaluate(d1, x)
    if r % 2:
        value = -value
    return r, _plain(value), (n1, d1)


def special_value(funcs, x):
    orders, values, cof = [], [], []
    for f in funcs:
        r, v, c = special_value_component(f, x)
        orders.append(r)
        values.append(v)
        cof.append(c)
    return SpecialValueReport(Fraction(x), tuple(orders), CenterElement(values), cof)


def compute_lfunction(sys, v, spec=None, N=8, bounds="auto", guard=DEFAULT_GUARD, budget=DEFAULT_BUDGET, cache=None):
    series = euler_product(sys, v, spec, N, budget=budget, cache=cache)
    funcs, used = reconstruct(series, bounds, guard)
    return LFunctionResult(series, funcs, used, guard, N)


# --- Weierstrass preparation ---------------------------------------------

def _sym(c, mod):
    c %= mod
    return c - mod if c > mod // 2 else c


def _mul_trunc(a, b, L, mod):
    out = [0] * L
    for i, x in enumerate(a[:L]):
        if x:
            for j in range(min(len(b), L - i)):
                out[i + j] = (out[i + j] + x * b[j]) % mod
    return out


def _inv_trunc(u, L, mod):
    inv0 = pow(u[0], -1, mod)
    out = [inv0]
    for k in range(1, L):
        acc = sum(u[i] * out[k - i] for i in range(1, min(k, len(u) - 1) + 1))
        out.append(-acc * inv0 % mod)
    return out


def weierstrass_prepare(series, p, N, M):
    """Write ``series = P*u`` mod (p^M, T^{N+1}).

    The supplied coefficients are taken as the whole series (terms past the
    list are zero).  Returns ``(P, u)`` as integer coefficient lists in the
    symmetric range mod p^M; ``P`` is monic of the Weierstrass degree w with
    lower coefficients divisible by p, ``u`` has N+1 coefficients and a
    p-unit constant term.
    """
    coeffs = [Fraction(c) for c in series]
    for c in coeffs:
        if c.denominator % p == 0:
            raise NotIntegralError(f"coefficient {c} is not {p}-integral")
    w = next((i for i, c in enumerate(coeffs[: N + 1]) if c.numerator % p), None)
    if w is None:
        raise IndeterminateDegreeError(f"series vanishes mod {p} up to T^{N}")
    mod = p ** (M + 1)
    L = max(len(coeffs), N + 1) + (M + 2) * max(w, 1)
    f = [c.numerator * pow(c.denominator, -1, mod) % mod for c in coeffs] + [0] * (L - len(coeffs))
    if w == 0:
        u = [_sym(c, p**M) for c in f[: N + 1]]
        return [1], u
    tau_f = f[w:]
    u = list(tau_f)
    a = None
    for _ in range(4 * M + 8):
        a_new = _mul_trunc(f, _inv_trunc(u, w, mod), w, mod)
        au = _mul_trunc(a_new, u, L, mod)
        u_new = [(x - y) % mod for x, y in zip(tau_f, au[w:])]
        if a_new == a and u_new == u:
            break
        a, u = a_new, u_new
    PM = p**M
    Pw = [_sym(c, PM) for c in a] + [1]
    u_out = [_sym(c, PM) for c in u[: N + 1]]
    if any(c % p for c in Pw[:-1]):
        raise AssertionError("prepared polynomial is not distinguished")
    return Pw, u_out


def distinguished_product_check(series, P_, u, p, N, M):
    """True iff P*u agrees with ``series`` mod (p^M, T^{N+1})."""
    mod = p**M
    prod = _mul_trunc([c % mod for c in P_], [c % mod for c in u], N + 1, mod)
    target = [(Fraction(c).numerator * pow(Fraction(c).denominator, -1, mod)) % mod for c in series[: N + 1]]
    target += [0] * (N + 1 - len(target))
    return prod == target
