"""Coefficient systems described by their stalks with Frobenius action.

A system assigns to every closed point x (outside its excluded locus) a
square matrix over the order R, the action of Frobenius on the stalk at x.
Matrices are lists of rows of algebra elements (coordinate tuples).
"""

from fractions import Fraction
from itertools import product
from math import gcd

from .coeffalg import AbelianGroupRing, IntegerRing, reduced_norm
from .errors import BranchLocusError, PositiveTwistError, RelationError, ScenarioError
from .exactalg import matrix as M
from .exactalg.numberfield import is_algebraic_integer
from .exactalg.smith import lattice_basis
from .ffgeom.field import embedding, frobenius, get_field, upoly_divmod, upoly_eval, upoly_trim
from .ffgeom.variety import Variety, parse_polynomial


def twist_evaluation_point(n, q):
    """q^{-n} for a twist n <= 0."""
    if n > 0:
        raise PositiveTwistError(f"positive twist {n} is not supported")
    return Fraction(q) ** (-n)


def _check_twist(n):
    if n > 0:
        raise PositiveTwistError(f"positive twist {n} is not supported")
    return int(n)


class CoefficientSystem:
    """Base class.  ``excludes_branch_locus`` tells the Euler product to skip
    points where :meth:`is_excluded` holds instead of failing."""

    excludes_branch_locus = False

    def __init__(self, spec, rank, twist=0):
        self.spec = spec
        self.rank = rank
        self.twist = _check_twist(twist)

    def is_excluded(self, x):
        return False

    def stalk_frobenius(self, x):
        raise NotImplementedError

    def is_constant(self):
        return False

    def describe(self):
        raise NotImplementedError


class Constant(CoefficientSystem):
    """The constant system R^rank with trivial Frobenius."""

    def __init__(self, spec=None, rank=1, twist=0):
        super().__init__(spec or IntegerRing(), rank, twist)

    def stalk_frobenius(self, x):
        one, zero = self.spec.one(), self.spec.zero()
        return [[one if i == j else zero for j in range(self.rank)] for i in range(self.rank)]

    def is_constant(self):
        return True

    def describe(self):
        return {"system": "constant", "rank": self.rank, "twist": self.twist}


class KummerCover:
    """The mu_m-cover y^m = f over A^1 (or P^1) over F_q, f = num/den.

    Requires m | q - 1.  Points are affine coordinates ``(a,)`` or projective
    ``(1, a)`` for x = a and ``(0, 1)`` for infinity.
    """

    def __init__(self, base, m, num, den="1", variable="x"):
        q = base.order
        if m < 1 or (q - 1) % m:
            raise ValueError(f"m = {m} must divide q - 1 = {q - 1}")
        self.base = base
        self.m = m
        self.variable = variable
        self.num_text = num if isinstance(num, str) else None
        self.den_text = den if isinstance(den, str) else None
        self.num = self._poly(num)
        self.den = self._poly(den)
        if not self.num or not self.den:
            raise ValueError("f must be a nonzero rational function")
        self._memo = {}
        # zeta = g^{(q-1)/m} for the primitive element g of F_q
        self.zeta = base.exp((q - 1) // m) if q > 2 else 1

    def _poly(self, f):
        if isinstance(f, str):
            d = parse_polynomial(f, [self.variable], self.base)
            if not d:
                return []
            deg = max(e[0] for e in d)
            out = [0] * (deg + 1)
            for (e,), c in d.items():
                out[e] = c
            return out
        return upoly_trim(list(f))

    @property
    def group(self):
        return AbelianGroupRing([self.m])

    def _embedded(self, F):
        emb = embedding(self.base, F)
        return [emb[c] for c in self.num], [emb[c] for c in self.den], emb

    def _affine_coordinate(self, x):
        c = x.coords
        if len(c) == 1:
            return c[0]
        if c[0] == 0:
            return None
        return c[1]

    def _unit_part(self, F, poly, a, q, d):
        """(valuation at the point, value of the unit part) of ``poly`` at ``a``."""
        val = upoly_eval(F, poly, a)
        if val:
            return 0, val
        pi = [1]
        conj = a
        for _ in range(d):
            new = [0] * (len(pi) + 1)
            for i, c in enumerate(pi):
                new[i + 1] = F.add(new[i + 1], c)
                new[i] = F.sub(new[i], F.mul(c, conj))
            pi = new
            conj = frobenius(conj, F, q)
        v = 0
        while upoly_eval(F, poly, a) == 0:
            poly, r = upoly_divmod(F, poly, pi)
            assert not r
            v += 1
        return v, upoly_eval(F, poly, a)

    def local_data(self, x):
        """(valuation of f at x, value of the unit part of f at x) in F_{q^deg x}."""
        hit = self._memo.get(x)
        if hit is None:
            hit = self._memo[x] = self._local_data(x)
        return hit

    def _local_data(self, x):
        F = get_field(self.base.p, self.base.k * x.degree)
        num, den, _ = self._embedded(F)
        a = self._affine_coordinate(x)
        if a is None:
            v = (len(self.den) - 1) - (len(self.num) - 1)
            return v, F.div(num[-1], den[-1])
        vn, un = self._unit_part(F, num, a, self.base.order, x.degree)
        vd, ud = self._unit_part(F, den, a, self.base.order, x.degree)
        return vn - vd, F.div(un, ud)

    def is_branch(self, x):
        v, _ = self.local_data(x)
        return v % self.m != 0

    def frobenius_class(self, x):
        v, u = self.local_data(x)
        if v % self.m:
            raise BranchLocusError(f"closed point {x.coords} (degree {x.degree}) is in the branch locus")
        F = get_field(self.base.p, self.base.k * x.degree)
        Q = F.order
        m = self.m
        if m == 1:
            return 0
        w = F.pow(u, (Q - 1) // m)
        emb = embedding(self.base, F)
        z = emb[self.zeta]
        step = (Q - 1) // m
        lw, lz = F.log(w), F.log(z)
        if lw % step or lz % step:
            raise AssertionError("power is not an m-th root of unity")
        L, j = lw // step, lz // step
        return L * pow(j, -1, m) % m

    def cover_variety(self, ambient="affine"):
        """The cover y^m * den(x) = num(x) over the unramified affine locus."""
        if ambient != "affine":
            raise ValueError("only the affine model of the cover is built")
        num = {(e, 0): c for e, c in enumerate(self.num) if c}
        eq = {(e, self.m): c for e, c in enumerate(self.den) if c}
        for k, c in num.items():
            eq[k] = self.base.sub(eq.get(k, 0), c)
        nd = {}
        for i, a in enumerate(self.num):
            for j, b in enumerate(self.den):
                if a and b:
                    nd[(i + j, 0)] = self.base.add(nd.get((i + j, 0), 0), self.base.mul(a, b))
        return Variety(self.base, "affine", 2, [eq], exclude=[{k: v for k, v in nd.items() if v}], variables=[self.variable, "y"])

    def base_variety(self, ambient="affine"):
        """A^1 (or P^1) with the zeros and poles of f removed."""
        if ambient == "affine":
            nd = {}
            for i, a in enumerate(self.num):
                for j, b in enumerate(self.den):
                    if a and b:
                        nd[(i + j,)] = self.base.add(nd.get((i + j,), 0), self.base.mul(a, b))
            return Variety(self.base, "affine", 1, [], exclude=[{k: v for k, v in nd.items() if v}], variables=[self.variable])
        return Variety(self.base, "projective", 1, [], variables=["x0", "x1"])

    def describe(self):
        return {"m": self.m, "num": self.num, "den": self.den}


class ZeroDimCover:
    """Pullback to Spec F_{q^d} of the Z/e torsor Spec F_{q^e} -> Spec F_q.

    At a closed point of degree d the Frobenius class is d mod e.
    """

    def __init__(self, d, e):
        if d < 1 or e < 1:
            raise ValueError("d and e must be positive")
        self.d = d
        self.e = e

    @property
    def group(self):
        return AbelianGroupRing([self.e])

    def is_branch(self, x):
        return False

    def frobenius_class(self, x):
        return x.degree % self.e

    def describe(self):
        return {"d": self.d, "e": self.e}


def cover_frobenius_class(cover, x):
    return cover.frobenius_class(x)


class CoverPushforward(CoefficientSystem):
    """Pushforward of Z along an abelian G-cover: the stalk is Z[G], Frobenius acts by sigma_x."""

    excludes_branch_locus = True

    def __init__(self, cover, twist=0):
        super().__init__(cover.group, 1, twist)
        self.cover = cover

    def is_excluded(self, x):
        return self.cover.is_branch(x)

    def stalk_frobenius(self, x):
        c = self.cover.frobenius_class(x)
        return [[self.spec.group_element(c)]]

    def describe(self):
        kind = "kummer" if isinstance(self.cover, KummerCover) else "zerodim_cover"
        return {"system": kind, **self.cover.describe(), "twist": self.twist}


class MonodromyAssignment(CoefficientSystem):
    """Frobenius matrices looked up per closed point.

    ``table`` maps a closed-point content hash, or ``"degree:d"``, to a
    matrix; ``default`` (a matrix or a callable on the point) covers the
    rest.  Matrices must be invertible over A; with ``strict=True`` their
    reduced norm must also be a unit of the integers of Z(A).
    """

    def __init__(self, spec, rank, table=None, default=None, twist=0, strict=False):
        super().__init__(spec, rank, twist)
        self.table = {k: self._coerce(v) for k, v in (table or {}).items()}
        self.default = default if callable(default) or default is None else self._coerce(default)
        self.strict = strict

    def _coerce(self, m):
        if len(m) != self.rank or any(len(r) != self.rank for r in m):
            raise ValueError(f"monodromy matrices must be {self.rank}x{self.rank}")
        return [[self.spec.element(x) for x in row] for row in m]

    def stalk_frobenius(self, x):
        key = x.content_hash()
        if key in self.table:
            m = self.table[key]
        elif f"degree:{x.degree}" in self.table:
            m = self.table[f"degree:{x.degree}"]
        elif callable(self.default):
            m = self._coerce(self.default(x))
        elif self.default is not None:
            m = self.default
        else:
            one, zero = self.spec.one(), self.spec.zero()
            m = [[one if i == j else zero for j in range(self.rank)] for i in range(self.rank)]
        self._check(m, x)
        return m

    def _check(self, m, x):
        nrd = reduced_norm(m, self.spec)
        if any(c == 0 for c in nrd):
            raise ScenarioError(f"monodromy matrix at {x.coords} is not invertible over A")
        if self.strict:
            for c in nrd:
                if not (is_algebraic_integer(c) and is_algebraic_integer(1 / c)):
                    raise ScenarioError(f"monodromy matrix at {x.coords} has non-unit reduced norm {c}")

    def describe(self):
        return {"system": "monodromy", "rank": self.rank, "twist": self.twist}


def stalk_frobenius(sys, x):
    if sys.is_excluded(x):
        raise BranchLocusError(f"closed point {x.coords} (degree {x.degree}) is excluded by the system")
    return sys.stalk_frobenius(x)


def integral_matrix(m, spec):
    """The Z-level matrix of a matrix over R (blocks of regular representations)."""
    n = len(m)
    dim = spec.dim
    out = [[0] * (n * dim) for _ in range(n * dim)]
    for i in range(n):
        for j in range(n):
            R = spec.regular_matrix(spec.element(m[i][j]))
            for r in range(dim):
                for s in range(dim):
                    out[i * dim + r][j * dim + s] = R[r][s]
    return out


# --- Artin model lattices -----------------------------------------------

def _frac_matrix(m):
    return [[Fraction(x) for x in row] for row in m]


def artin_model_lattice(generators, cycle_type):
    """A G-stable full-rank lattice for an abelian G = prod Z/n_i acting on Q^r.

    ``generators[i]`` is the matrix of the i-th cyclic generator.  Returns
    ``(basis, matrices)``: basis vectors (rows, rational) of the Z-span of
    the G-orbit of the standard basis, and the integral matrices of the
    generators in that basis.
    """
    gens = [_frac_matrix(g) for g in generators]
    if len(gens) != len(cycle_type):
        raise RelationError("need one generator matrix per cyclic factor")
    if not gens:
        raise RelationError("at least one generator is required")
    r = len(gens[0])
    ident = M.identity(r, Fraction(1), Fraction(0))
    for g, n in zip(gens, cycle_type):
        if len(g) != r or any(len(row) != r for row in g):
            raise RelationError("generator matrices must all be r x r")
        power = ident
        for _ in range(n):
            power = M.matmul(g, power)
        if power != ident:
            raise RelationError(f"generator does not satisfy g^{n} = 1")
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            if M.matmul(gens[a], gens[b]) != M.matmul(gens[b], gens[a]):
                raise RelationError("generators do not commute")
    # every group element applied to the standard basis
    vectors = []
    for exps in product(*[range(n) for n in cycle_type]):
        g = ident
        for mat, e in zip(gens, exps):
            for _ in range(e):
                g = M.matmul(mat, g)
        for j in range(r):
            vectors.append([g[i][j] for i in range(r)])
    den = 1
    for v in vectors:
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
    scaled = [[int(x * den) for x in v] for v in vectors]
    basis = [[Fraction(x, den) for x in row] for row in lattice_basis(scaled)]
    if len(basis) != r:
        raise RelationError("orbit span is not of full rank")
    B = M.transpose(basis)  # columns are basis vectors
    Binv = M.inverse(B)
    mats = []
    for g in gens:
        mg = M.matmul(Binv, M.matmul(g, B))
        if any(Fraction(x).denominator != 1 for row in mg for x in row):
            raise AssertionError("orbit lattice is not stable")
        mats.append([[int(x) for x in row] for row in mg])
    return basis, mats

