"""Bounded complexes of free modules with a chain endomorphism.

Matrices act on column vectors: ``d[i]`` maps C^i to C^{i+1} and has
``rank(i+1)`` rows and ``rank(i)`` columns.  Entries are elements of the
order (ints, Fractions or coordinate sequences, anything ``spec.element``
accepts).
"""

from fractions import Fraction

from ..coeffalg import IntegerRing, WedderburnData, _descend, reduced_charpoly
from ..errors import ComplexError, NotIntegralError
from ..exactalg import matrix as M
from ..exactalg.numberfield import NFElement
from ..exactalg.pade import RationalFunction


def _plain(x):
    if isinstance(x, NFElement) and x.field.degree == 1:
        return x.coeffs[0]
    return x


def _shape_ok(m, rows, cols):
    if rows == 0 or cols == 0:
        return all(len(r) == cols for r in m) and len(m) in (0, rows)
    return len(m) == rows and all(len(r) == cols for r in m)


def zero_matrix(rows, cols, zero=0):
    return [[zero] * cols for _ in range(rows)]


# --- linear algebra with explicit shapes ---------------------------------

def mat_mul(a, b, rows, inner, cols, zero=0):
    if inner == 0 or rows == 0:
        return zero_matrix(rows, cols, zero)
    return M.matmul(a, b)


def mat_vec(a, v, rows):
    if rows == 0:
        return []
    if not v:
        return [0] * rows
    return M.matvec(a, v)


def columns(m, rows, cols):
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def from_columns(cols, rows):
    return [[c[i] for c in cols] for i in range(rows)]


def kernel_basis(m, rows, cols):
    """Basis of ker(m) for a rows x cols matrix (columns may be 0)."""
    if cols == 0:
        return []
    if rows == 0:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    return M.kernel(m)


def rank_of(m, rows, cols):
    if rows == 0 or cols == 0:
        return 0
    return M.rank(m)


class Quotient:
    """A subquotient Z/B of a vector space over a field, with chosen lifts.

    ``lifts`` are vectors of the ambient space whose classes form a basis
    of Z/B; :meth:`coords` writes the class of a vector of Z in that basis.
    """

    def __init__(self, z_basis, b_vectors, n):
        self.n = n
        b_basis = []
        for v in b_vectors:
            if any(x != 0 for x in v) and rank_of(from_columns(b_basis + [v], n), n, len(b_basis) + 1) > len(b_basis):
                b_basis.append(v)
        self.b_basis = b_basis
        lifts = []
        current = list(b_basis)
        for v in z_basis:
            trial = current + [v]
            if rank_of(from_columns(trial, n), n, len(trial)) > len(current):
                current = trial
                lifts.append(v)
        self.lifts = lifts
        self._frame = from_columns(current, n)
        self._nb = len(b_basis)

    @property
    def dim(self):
        return len(self.lifts)

    def coords(self, v):
        if not self.lifts:
            return []
        c = M.solve(self._frame, list(v))
        if c is None:
            raise ComplexError("vector does not lie in the cycle space")
        return c[self._nb:]


def field_cohomology(dims, diffs, i):
    """H^i of a complex of vector spaces given by ``dims`` and ``diffs``."""
    n = dims.get(i, 0)
    nxt = dims.get(i + 1, 0)
    prv = dims.get(i - 1, 0)
    d_out = diffs.get(i, zero_matrix(nxt, n))
    d_in = diffs.get(i - 1, zero_matrix(n, prv))
    z = kernel_basis(d_out, nxt, n)
    b = columns(d_in, n, prv)
    return Quotient(z, b, n)


def induced_map(src, dst, f, rows):
    """Matrix of the map induced by ``f`` (on ambient spaces) from src to dst."""
    cols = []
    for v in src.lifts:
        cols.append(dst.coords(mat_vec(f, v, rows)))
    return from_columns(cols, dst.dim)


# --- the complex type -----------------------------------------------------

class LinearComplex:
    """A complex of free modules over one ring (Z or a field) with an endomorphism."""

    def __init__(self, dims, diffs, endo, field=None):
        self.dims = dict(dims)
        self.diffs = dict(diffs)
        self.endo = dict(endo)
        self.field = field

    @property
    def degrees(self):
        return sorted(self.dims)

    def zero(self):
        return self.field.zero() if self.field is not None else 0

    def one(self):
        return self.field.one() if self.field is not None else 1

    def d(self, i):
        return self.diffs.get(i, zero_matrix(self.dims.get(i + 1, 0), self.dims.get(i, 0), self.zero()))

    def theta(self, i):
        n = self.dims.get(i, 0)
        return self.endo.get(i, zero_matrix(n, n, self.zero()))

    def psi(self, x):
        """The endomorphism 1 - x*theta, degreewise."""
        out = {}
        for i in self.degrees:
            n = self.dims[i]
            th = self.theta(i)
            out[i] = [[(self.one() if r == c else self.zero()) - th[r][c] * x for c in range(n)] for r in range(n)]
        return out

    def cohomology(self, i):
        return field_cohomology(self.dims, self.diffs, i)


def fiber_of(lc, psi):
    """F^i = C^i + C^{i-1}, d(a, b) = (d a, psi a - d b)."""
    lo, hi = min(lc.degrees), max(lc.degrees)
    zero = lc.zero()
    dims = {i: lc.dims.get(i, 0) + lc.dims.get(i - 1, 0) for i in range(lo, hi + 2)}
    diffs = {}
    for i in range(lo, hi + 1):
        n_i, n_im1, n_ip1 = lc.dims.get(i, 0), lc.dims.get(i - 1, 0), lc.dims.get(i + 1, 0)
        rows = n_ip1 + n_i
        cols = n_i + n_im1
        m = zero_matrix(rows, cols, zero)
        d_i = lc.d(i)
        d_im1 = lc.d(i - 1)
        p = psi.get(i)
        for r in range(n_ip1):
            for c in range(n_i):
                m[r][c] = d_i[r][c]
        for r in range(n_i):
            for c in range(n_i):
                m[n_ip1 + r][c] = p[r][c]
            for c in range(n_im1):
                m[n_ip1 + r][n_i + c] = -d_im1[r][c]
        diffs[i] = m
    return dims, diffs


def beta0_matrix(lc, i):
    """(a, b) in F^i -> (0, a) in F^{i+1}."""
    n_i, n_im1, n_ip1 = lc.dims.get(i, 0), lc.dims.get(i - 1, 0), lc.dims.get(i + 1, 0)
    m = zero_matrix(n_ip1 + n_i, n_i + n_im1, lc.zero())
    for r in range(n_i):
        m[n_ip1 + r][r] = lc.one()
    return m


class PerfectComplexEndo:
    """A bounded complex of free modules over an order with a chain endomorphism.

    ``ranks`` maps degrees to ranks (a list means degrees 0, 1, ...).
    ``differentials[i]`` and ``theta[i]`` are matrices over the order; missing
    ones are zero.  The identities d*d = 0 and theta*d = d*theta are checked in
    every Wedderburn component.
    """

    def __init__(self, ranks, differentials=None, theta=None, spec=None, check=True):
        self.spec = spec if spec is not None else IntegerRing()
        if isinstance(ranks, (list, tuple)):
            ranks = dict(enumerate(ranks))
        ranks = {int(k): int(v) for k, v in ranks.items()}
        if not ranks:
            raise ComplexError("a complex needs at least one degree")
        lo, hi = min(ranks), max(ranks)
        self.ranks = {i: ranks.get(i, 0) for i in range(lo, hi + 1)}
        if any(r < 0 for r in self.ranks.values()):
            raise ComplexError("ranks must be nonnegative")
        self.differentials = {int(k): v for k, v in (differentials or {}).items()}
        self.theta = {int(k): v for k, v in (theta or {}).items()}
        for i, m in self.differentials.items():
            if i not in self.ranks or i + 1 not in self.ranks:
                if self.rank(i) and self.rank(i + 1):
                    raise ComplexError(f"differential d^{i} leaves the complex")
            if not _shape_ok(m, self.rank(i + 1), self.rank(i)):
                raise ComplexError(f"d^{i} must be {self.rank(i + 1)}x{self.rank(i)}")
        for i, m in self.theta.items():
            if not _shape_ok(m, self.rank(i), self.rank(i)):
                raise ComplexError(f"theta^{i} must be {self.rank(i)}x{self.rank(i)}")
        if check:
            self.check()

    @property
    def degrees(self):
        return sorted(self.ranks)

    def rank(self, i):
        return self.ranks.get(i, 0)

    def d(self, i):
        z = self.spec.zero() if not isinstance(self.spec, IntegerRing) else 0
        return self.differentials.get(i, zero_matrix(self.rank(i + 1), self.rank(i), z))

    def theta_at(self, i):
        z = self.spec.zero() if not isinstance(self.spec, IntegerRing) else 0
        n = self.rank(i)
        return self.theta.get(i, zero_matrix(n, n, z))

    # -- component and Z-level views ------------------------------------

    def _image(self, m, rows, cols, c):
        spec = self.spec
        K, k = spec.components()[c]
        L = spec.comps[c][1] if isinstance(spec, WedderburnData) else K
        out = zero_matrix(rows * k, cols * k, L.zero())
        for i in range(rows):
            for j in range(cols):
                blk = spec.represent(spec.element(m[i][j]))[c]
                for r in range(k):
                    for s in range(k):
                        out[i * k + r][j * k + s] = L.element(blk[r][s]) if not isinstance(blk[r][s], NFElement) else blk[r][s]
        return out

    def splitting_field(self, c):
        spec = self.spec
        if isinstance(spec, WedderburnData):
            return spec.comps[c][1]
        return spec.components()[c][0]

    def component(self, c):
        """The complex of vector spaces rho_c(C) over the splitting field of component c."""
        _, k = self.spec.components()[c]
        L = self.splitting_field(c)
        dims = {i: r * k for i, r in self.ranks.items()}
        diffs = {i: self._image(self.d(i), self.rank(i + 1), self.rank(i), c) for i in self.degrees}
        endo = {i: self._image(self.theta_at(i), self.rank(i), self.rank(i), c) for i in self.degrees}
        return LinearComplex(dims, diffs, endo, field=L)

    def _zblock(self, m, rows, cols):
        spec = self.spec
        dim = spec.dim
        out = zero_matrix(rows * dim, cols * dim)
        for i in range(rows):
            for j in range(cols):
                R = spec.regular_matrix(spec.element(m[i][j]))
                for r in range(dim):
                    for s in range(dim):
                        v = Fraction(R[r][s])
                        if v.denominator != 1:
                            raise NotIntegralError(f"entry ({i},{j}) is not integral over Z")
                        out[i * dim + r][j * dim + s] = v.numerator
        return out

    def zlevel(self):
        """The underlying complex of free Z-modules (regular representation blocks)."""
        dim = self.spec.dim
        dims = {i: r * dim for i, r in self.ranks.items()}
        diffs = {i: self._zblock(self.d(i), self.rank(i + 1), self.rank(i)) for i in self.degrees}
        endo = {i: self._zblock(self.theta_at(i), self.rank(i), self.rank(i)) for i in self.degrees}
        return LinearComplex(dims, diffs, endo)

    def check(self):
        ncomp = len(self.spec.components())
        for c in range(ncomp):
            lc = self.component(c)
            for i in self.degrees:
                n0, n1, n2 = lc.dims.get(i, 0), lc.dims.get(i + 1, 0), lc.dims.get(i + 2, 0)
                dd = mat_mul(lc.d(i + 1), lc.d(i), n2, n1, n0)
                if any(x != 0 for r in dd for x in r):
                    raise ComplexError(f"d^{i + 1} d^{i} != 0")
                left = mat_mul(lc.theta(i + 1), lc.d(i), n1, n1, n0)
                right = mat_mul(lc.d(i), lc.theta(i), n1, n0, n0)
                if any(a != b for ra, rb in zip(left, right) for a, b in zip(ra, rb)):
                    raise ComplexError(f"theta does not commute with d^{i}")

    # -- constructions ---------------------------------------------------

    def shift(self, k=1):
        """C[k]: degree i holds C^{i+k}, differentials multiplied by (-1)^k."""
        sign = -1 if k % 2 else 1
        ranks = {i - k: r for i, r in self.ranks.items()}
        diffs = {i - k: _scale_entries(self.spec, m, sign) for i, m in self.differentials.items()}
        theta = {i - k: m for i, m in self.theta.items()}
        return PerfectComplexEndo(ranks, diffs, theta, self.spec, check=False)

    def direct_sum(self, other):
        if other.spec != self.spec:
            raise ComplexError("direct sum of complexes over different orders")
        degs = set(self.ranks) | set(other.ranks)
        lo, hi = min(degs), max(degs)
        ranks = {i: self.rank(i) + other.rank(i) for i in range(lo, hi + 1)}
        zero = self.spec.zero() if not isinstance(self.spec, IntegerRing) else 0
        diffs, theta = {}, {}
        for i in range(lo, hi + 1):
            diffs[i] = _block_sum(self.d(i), other.d(i), (self.rank(i + 1), self.rank(i)), (other.rank(i + 1), other.rank(i)), zero)
            theta[i] = _block_sum(self.theta_at(i), other.theta_at(i), (self.rank(i),) * 2, (other.rank(i),) * 2, zero)
        return PerfectComplexEndo(ranks, diffs, theta, self.spec, check=False)

    def describe(self):
        return {
            "order": self.spec.describe(),
            "ranks": {str(i): r for i, r in self.ranks.items()},
            "differentials": {str(i): _jsonable(m) for i, m in sorted(self.differentials.items())},
            "theta": {str(i): _jsonable(m) for i, m in sorted(self.theta.items())},
        }


def _jsonable(m):
    def conv(x):
        if isinstance(x, (tuple, list)):
            return [conv(y) for y in x]
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else str(x)

    return [[conv(x) for x in row] for row in m]


def _scale_entries(spec, m, s):
    if s == 1:
        return m
    out = []
    for row in m:
        new = []
        for x in row:
            if isinstance(x, (int, Fraction)):
                new.append(-x)
            else:
                new.append(tuple(-Fraction(c) for c in x))
        out.append(new)
    return out


def _block_sum(a, b, sa, sb, zero):
    rows, cols = sa[0] + sb[0], sa[1] + sb[1]
    out = zero_matrix(rows, cols, zero)
    for i in range(sa[0]):
        for j in range(sa[1]):
            out[i][j] = a[i][j]
    for i in range(sb[0]):
        for j in range(sb[1]):
            out[sa[0] + i][sa[1] + j] = b[i][j]
    return out


# --- characteristic rational fraction -------------------------------------

def charfrac(C, spec=None):
    """xi(theta, T) = prod_i Nrd(1 - theta^i T | C^i)^{(-1)^{i+1}}, per component."""
    spec = spec if spec is not None else C.spec
    ncomp = len(spec.components())
    out = [RationalFunction((Fraction(1),), (Fraction(1),)) for _ in range(ncomp)]
    for i in C.degrees:
        if C.rank(i) == 0:
            continue
        polys = reduced_charpoly(C.theta_at(i), spec)
        for c, p in enumerate(polys):
            f = RationalFunction(tuple(_plain(x) for x in p), (Fraction(1),))
            out[c] = out[c] * f if i % 2 else out[c] / f
    return out


def descend(spec, c, value):
    """Push a value computed over the splitting field down to the center."""
    return _plain(_descend(spec, c, value))
