"""Affine and projective varieties over F_q, point counts and closed points."""

import hashlib
import json
from dataclasses import dataclass
from itertools import product

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, implicit_multiplication_application

from ..errors import ResourceLimitError, ScenarioError
from .field import count_roots, embedding, find_roots, frobenius, get_field, upoly_gcd

DEFAULT_BUDGET = 2_000_000

GENERATOR_SYMBOL = "w"


def parse_polynomial(text, variables, base):
    """Parse ``text`` into ``{exponents: coeff}`` with coefficients in ``base``.

    Integer and rational coefficients are reduced mod p.  The symbol ``w``
    stands for the class of x in ``base = F_p[x]/(modulus)``.
    """
    syms = {v: sympy.Symbol(v) for v in variables}
    w = sympy.Symbol(GENERATOR_SYMBOL)
    local = dict(syms)
    local[GENERATOR_SYMBOL] = w
    try:
        expr = parse_expr(
            text.replace("^", "**"),
            local_dict=local,
            transformations=standard_transformations + (implicit_multiplication_application,),
        )
    except Exception as exc:  # sympy raises a zoo of exception types here
        raise ScenarioError(f"cannot parse polynomial {text!r}: {exc}") from None
    gens = [syms[v] for v in variables] + [w]
    try:
        poly = sympy.Poly(sympy.expand(expr), *gens)
    except sympy.PolynomialError as exc:
        raise ScenarioError(f"{text!r} is not a polynomial in {variables}: {exc}") from None
    p = base.p
    out = {}
    for monom, coeff in poly.terms():
        coeff = sympy.Rational(coeff)
        if coeff.q % p == 0:
            raise ScenarioError(f"coefficient {coeff} of {text!r} has denominator divisible by {p}")
        c = coeff.p * pow(coeff.q, -1, p) % p
        if c == 0:
            continue
        exps = tuple(int(e) for e in monom[:-1])
        wpow = int(monom[-1])
        value = base.mul(c, base.pow(base.gen, wpow)) if wpow else c
        out[exps] = base.add(out.get(exps, 0), value)
    return {e: c for e, c in out.items() if c}


class Variety:
    """Zero locus of ``equations`` in affine n-space or projective n-space.

    ``equations`` and ``exclude`` are lists of ``{exponents: coeff}`` dicts
    (or strings, parsed against ``variables``).  Points where every
    ``exclude`` equation vanishes are removed.  ``exclude=None`` removes
    nothing; note an empty list would remove everything.
    """

    def __init__(self, base, ambient, n, equations=(), exclude=None, variables=None):
        if ambient not in ("affine", "projective"):
            raise ValueError("ambient must be 'affine' or 'projective'")
        nvars = n + 1 if ambient == "projective" else n
        if variables is None:
            variables = [f"x{i}" for i in range(nvars)]
        if len(variables) != nvars:
            raise ValueError(f"expected {nvars} variables, got {len(variables)}")
        self.base = base
        self.ambient = ambient
        self.n = n
        self.variables = tuple(variables)
        self.equations = [self._coerce(e) for e in equations]
        self.exclude = None if exclude is None else [self._coerce(e) for e in exclude]
        if ambient == "projective":
            for eq in self.equations + (self.exclude or []):
                degs = {sum(e) for e in eq}
                if len(degs) > 1:
                    raise ValueError("projective equations must be homogeneous")

    def _coerce(self, eq):
        if isinstance(eq, str):
            return parse_polynomial(eq, self.variables, self.base)
        return {tuple(k): v for k, v in eq.items() if v}

    @property
    def nvars(self):
        return len(self.variables)

    def content_hash(self):
        def enc(eqs):
            return sorted([[list(k), v] for k, v in eq.items()] for eq in eqs)

        data = {
            "p": self.base.p,
            "k": self.base.k,
            "modulus": list(self.base.modulus),
            "ambient": self.ambient,
            "n": self.n,
            "equations": sorted(enc([e]) for e in self.equations),
            "exclude": None if self.exclude is None else sorted(enc([e]) for e in self.exclude),
        }
        blob = json.dumps(data, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def __repr__(self):
        return f"Variety({self.ambient} {self.n}-space over {self.base}, {len(self.equations)} equation(s))"


def affine_space(base, n):
    return Variety(base, "affine", n)


def projective_space(base, n):
    return Variety(base, "projective", n)


def spec_extension(base, d):
    """Spec F_{q^d} as the closed subscheme of A^1 cut out by an irreducible of degree d."""
    big = get_field(base.p, base.k * d)
    g = big.primitive
    q = base.order
    poly = [1]
    conj = g
    for _ in range(d):
        # multiply by (y - conj)
        new = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] = big.add(new[i + 1], c)
            new[i] = big.sub(new[i], big.mul(c, conj))
        poly = new
        conj = frobenius(conj, big, q)
    emb = embedding(base, big)
    back = {v: i for i, v in enumerate(emb)}
    coeffs = {}
    for i, c in enumerate(poly):
        if c not in back:
            raise AssertionError("minimal polynomial not defined over the base")
        if back[c]:
            coeffs[(i,)] = back[c]
    return Variety(base, "affine", 1, [coeffs], variables=["y"])


# --- evaluation -------------------------------------------------------------

class _CompiledEquation:
    """An equation viewed as a polynomial in one fiber variable."""

    def __init__(self, eq, fiber, emb):
        by_power = {}
        for exps, c in eq.items():
            k = exps[fiber] if fiber is not None else 0
            rest = tuple(e for i, e in enumerate(exps) if i != fiber) if fiber is not None else exps
            by_power.setdefault(k, []).append((rest, emb[c]))
        self.degree = max(by_power) if by_power else -1
        self.terms = by_power

    def coefficients(self, F, values):
        """Coefficient list (low to high) in the fiber variable at ``values``."""
        out = [0] * (self.degree + 1)
        log = F.log_table if F.k > 1 else None
        for k, terms in self.terms.items():
            acc = 0
            for rest, c in terms:
                v = c
                for x, e in zip(values, rest):
                    if e:
                        if x == 0:
                            v = 0
                            break
                        v = F.mul(v, F.pow(x, e)) if log is None else F.exp_table[(log[v] + e * log[x]) % (F.order - 1)]
                if v:
                    acc = F.add(acc, v)
            out[k] = acc
        while out and out[-1] == 0:
            out.pop()
        return out


def _eval(F, eq, point, emb):
    acc = 0
    for exps, c in eq.items():
        v = emb[c]
        for x, e in zip(point, exps):
            if e:
                v = F.mul(v, F.pow(x, e))
                if v == 0:
                    break
        acc = F.add(acc, v)
    return acc


def _is_excluded(F, v, point, emb):
    if v.exclude is None:
        return False
    return all(_eval(F, eq, point, emb) == 0 for eq in v.exclude)


def _strata(v):
    """(fixed prefix, number of free coordinates) for each affine chart stratum."""
    n = v.nvars
    if v.ambient == "affine":
        return [((), n)]
    return [(tuple([0] * i + [1]), n - i - 1) for i in range(n)]


def _candidate_count(v, Q, method, counting=False):
    total = 0
    for prefix, free in _strata(v):
        if counting and not v.equations and v.exclude is None:
            continue
        if method == "fiber" and _choose_fiber(v, prefix, free) is not None:
            total += Q ** (free - 1)
        else:
            total += Q**free
    return total


def _choose_fiber(v, prefix, free):
    """Index (within the free coordinates) of the variable of smallest maximal degree."""
    if free == 0 or not v.equations:
        return None
    off = len(prefix)
    best = None
    for j in range(free):
        deg = max(max((e[off + j] for e in eq), default=0) for eq in v.equations)
        if deg == 0:
            continue
        if best is None or deg < best[0]:
            best = (deg, j)
    return None if best is None else best[1]


def rational_points(v, d=1, budget=DEFAULT_BUDGET, method="fiber"):
    """Yield the F_{q^d}-points of ``v`` as tuples of encoded field elements.

    Projective points are normalized so their first nonzero coordinate is 1.
    """
    F = get_field(v.base.p, v.base.k * d)
    Q = F.order
    cost = _candidate_count(v, Q, method)
    if cost > budget:
        raise ResourceLimitError(f"enumeration needs {cost} candidates over {F}, budget is {budget}")
    emb = embedding(v.base, F)
    for prefix, free in _strata(v):
        yield from _stratum_points(v, F, emb, prefix, free, method)


def _stratum_points(v, F, emb, prefix, free, method):
    Q = F.order
    fiber = _choose_fiber(v, prefix, free) if method == "fiber" else None
    if fiber is None:
        for tail in product(range(Q), repeat=free):
            pt = prefix + tail
            if all(_eval(F, eq, pt, emb) == 0 for eq in v.equations) and not _is_excluded(F, v, pt, emb):
                yield pt
        return
    fi = len(prefix) + fiber
    compiled = [_CompiledEquation(eq, fi, emb) for eq in v.equations]
    for others in product(range(Q), repeat=free - 1):
        rest = prefix + others[:fiber] + (None,) + others[fiber:]
        values = prefix + others
        polys = [c.coefficients(F, values) for c in compiled]
        polys = [p for p in polys if p]
        if not polys:
            roots = range(Q)
        else:
            g = polys[0]
            for p in polys[1:]:
                g = upoly_gcd(F, g, p)
            roots = find_roots(F, g)
        for r in roots:
            pt = rest[:fi] + (r,) + rest[fi + 1 :]
            if not _is_excluded(F, v, pt, emb):
                yield pt


def count_points(v, d=1, budget=DEFAULT_BUDGET, method="fiber", cache=None):
    """Number of F_{q^d}-rational points of ``v``."""
    if d < 1:
        raise ValueError("d must be positive")
    key = v.content_hash()
    if cache is not None:
        hit = cache.get(key, d)
        if hit is not None:
            return hit
    if method == "fiber" and v.exclude is None and len(v.equations) <= 1:
        n = _count_single_equation(v, d, budget)
    else:
        n = sum(1 for _ in rational_points(v, d, budget, method))
    if cache is not None:
        cache.put(key, d, n)
    return n


def _count_single_equation(v, d, budget):
    F = get_field(v.base.p, v.base.k * d)
    Q = F.order
    cost = _candidate_count(v, Q, "fiber", counting=True)
    if cost > budget:
        raise ResourceLimitError(f"enumeration needs {cost} candidates over {F}, budget is {budget}")
    emb = embedding(v.base, F)
    total = 0
    for prefix, free in _strata(v):
        if not v.equations:
            # an equation-free chart stratum is a copy of affine space
            total += Q**free
            continue
        fiber = _choose_fiber(v, prefix, free)
        if fiber is None:
            total += sum(1 for _ in _stratum_points(v, F, emb, prefix, free, "fiber"))
            continue
        fi = len(prefix) + fiber
        ce = _CompiledEquation(v.equations[0], fi, emb)
        for others in product(range(Q), repeat=free - 1):
            poly = ce.coefficients(F, prefix + others)
            total += Q if not poly else count_roots(F, poly)
    return total


# --- closed points ----------------------------------------------------------

@dataclass(frozen=True)
class ClosedPoint:
    """A Frobenius orbit of geometric points; ``coords`` live in F_{q^degree}."""

    degree: int
    coords: tuple
    p: int
    k: int

    @property
    def field(self):
        return get_field(self.p, self.k * self.degree)

    @property
    def q(self):
        return self.p**self.k

    @property
    def orbit_size(self):
        return self.degree

    def orbit(self):
        F = self.field
        pts = [self.coords]
        cur = self.coords
        for _ in range(self.degree - 1):
            cur = tuple(frobenius(c, F, self.q) for c in cur)
            pts.append(cur)
        return pts

    def content_hash(self):
        blob = json.dumps([self.p, self.k, self.degree, list(self.coords)])
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def point_degree(F, pt, q):
    """Size of the Frobenius orbit of a point with coordinates in F."""
    d = 1
    cur = tuple(frobenius(c, F, q) for c in pt)
    while cur != pt:
        cur = tuple(frobenius(c, F, q) for c in cur)
        d += 1
    return d


def closed_points_of_degree(v, d, budget=DEFAULT_BUDGET, method="fiber"):
    F = get_field(v.base.p, v.base.k * d)
    q = v.base.order
    out = []
    for pt in rational_points(v, d, budget, method):
        orbit = [pt]
        cur = pt
        minimal = True
        for _ in range(d - 1):
            cur = tuple(frobenius(c, F, q) for c in cur)
            if cur == pt:
                break
            if cur < pt:
                minimal = False
                break
            orbit.append(cur)
        if not minimal or len(orbit) != d:
            continue
        # orbit closes after exactly d steps
        if tuple(frobenius(c, F, q) for c in orbit[-1]) != pt:
            continue
        out.append(ClosedPoint(d, pt, v.base.p, v.base.k))
    return out


def closed_points_up_to(v, D, budget=DEFAULT_BUDGET, method="fiber"):
    """One representative (the orbit minimum) per closed point of degree <= D."""
    if D < 1:
        raise ValueError("D must be positive")
    out = []
    for d in range(1, D + 1):
        out.extend(closed_points_of_degree(v, d, budget, method))
    return out


def mobius(n):
    out = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def closed_point_counts(counts):
    """Closed-point counts per degree from ``counts = [N_1, ..., N_D]``."""
    out = []
    for d in range(1, len(counts) + 1):
        s = sum(mobius(d // e) * counts[e - 1] for e in range(1, d + 1) if d % e == 0)
        if s % d:
            raise AssertionError(f"point counts {counts} are inconsistent at degree {d}")
        out.append(s // d)
    return out
