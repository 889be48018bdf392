"""Orders in semisimple Q-algebras: center decomposition, Nrd, reduced rank.

An algebra element is a tuple of Fractions, its coordinates in the algebra
basis of the order.  Each order knows its Wedderburn components
``(K_i, k_i)`` together with component representations
``rho_i: A -> M_{k_i}(K_i)``; the reduced norm of a matrix over A is the
determinant of its image under ``rho_i``.
"""

from fractions import Fraction
from itertools import product
from math import gcd

from .errors import (
    DescentError,
    MalformedAlgebraError,
    NonDivisibleError,
    ScenarioError,
    ZeroComponentError,
)
from .exactalg import matrix as M
from .exactalg import poly as P
from .exactalg.numberfield import (
    QQ,
    NFElement,
    NumberField,
    cyclotomic_field,
    is_algebraic_integer,
    root_of_unity,
)


def _lcm(a, b):
    return a * b // gcd(a, b)


class CenterElement:
    """A value in Z(A) = prod K_i, stored as a tuple of field elements."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __mul__(self, other):
        if isinstance(other, CenterElement):
            return CenterElement(a * b for a, b in zip(self.components, other.components))
        return CenterElement(a * other for a in self.components)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CenterElement):
            return CenterElement(a / b for a, b in zip(self.components, other.components))
        return CenterElement(a / other for a in self.components)

    def __pow__(self, e):
        return CenterElement(a**e for a in self.components)

    def inverse(self):
        return CenterElement(1 / a for a in self.components)

    def __eq__(self, other):
        if not isinstance(other, CenterElement):
            return NotImplemented
        return len(self) == len(other) and all(a == b for a, b in zip(self.components, other.components))

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def _frac(x):
    if isinstance(x, NFElement):
        return x.to_rational()
    return Fraction(x)


class OrderSpec:
    """Base class; subclasses fill in ``dim``, ``components`` and ``represent``."""

    dim = 0

    def components(self):
        raise NotImplementedError

    def represent(self, a):
        """Component images ``[rho_i(a)]`` of an algebra element."""
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def element(self, x):
        """Coerce ints, Fractions and coordinate sequences to an element."""
        if isinstance(x, (int, Fraction)):
            return tuple(Fraction(x) * c for c in self.one())
        x = tuple(Fraction(c) for c in x)
        if len(x) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(x)}")
        return x

    def zero(self):
        return tuple(Fraction(0) for _ in range(self.dim))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, a, c):
        return tuple(x * c for x in a)

    def regular_matrix(self, a):
        """Matrix (over Q) of left multiplication by ``a`` in the algebra basis."""
        cols = []
        for j in range(self.dim):
            e = [Fraction(0)] * self.dim
            e[j] = Fraction(1)
            cols.append(self.mul(a, tuple(e)))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def is_integral_element(self, a):
        return all(Fraction(c).denominator == 1 for c in a)

    def describe(self):
        raise NotImplementedError


class IntegerRing(OrderSpec):
    dim = 1

    def components(self):
        return [(QQ, 1)]

    def represent(self, a):
        return [[[QQ.element(a[0])]]]

    def mul(self, a, b):
        return (a[0] * b[0],)

    def one(self):
        return (Fraction(1),)

    def describe(self):
        return {"order": "Z"}

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    def __repr__(self):
        return "Z"


class AbelianGroupRing(OrderSpec):
    """Z[G] for G = Z/n_1 x ... x Z/n_r, basis = group elements in lexicographic order."""

    def __init__(self, cycle_type):
        ct = tuple(int(n) for n in cycle_type)
        if not ct or any(n < 1 for n in ct):
            raise ValueError("cycle type must be a nonempty list of positive integers")
        self.cycle_type = ct
        self.elements = list(product(*[range(n) for n in ct]))
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.dim = len(self.elements)
        e = 1
        for n in ct:
            e = _lcm(e, n)
        self.exponent = e
        self._orbits = None

    def __eq__(self, other):
        return isinstance(other, AbelianGroupRing) and self.cycle_type == other.cycle_type

    def __hash__(self):
        return hash(("ZG", self.cycle_type))

    def __repr__(self):
        return f"Z[{' x '.join(f'Z/{n}' for n in self.cycle_type)}]"

    def describe(self):
        return {"order": "ZG", "cycle_type": list(self.cycle_type)}

    def group_mul(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.cycle_type))

    def group_element(self, g):
        """Basis vector of the group element ``g`` (a tuple, or an int for cyclic G)."""
        if isinstance(g, int):
            g = (g,)
        g = tuple(a % n for a, n in zip(g, self.cycle_type))
        v = [Fraction(0)] * self.dim
        v[self.index[g]] = Fraction(1)
        return tuple(v)

    def mul(self, a, b):
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                out[self.index[self.group_mul(self.elements[i], self.elements[j])]] += x * y
        return tuple(out)

    def one(self):
        return self.group_element(tuple(0 for _ in self.cycle_type))

    def character_order(self, chi):
        o = 1
        for a, n in zip(chi, self.cycle_type):
            o = _lcm(o, n // gcd(a, n))
        return o

    def galois_orbits(self):
        """Galois orbits of characters, each a sorted list of exponent vectors.

        A character is an exponent vector ``a`` with chi_a(g) =
        zeta_N^{sum a_j g_j N/n_j}; conjugation multiplies ``a`` by units mod N.
        Orbits are listed by their smallest member, so the trivial character
        comes first.
        """
        if self._orbits is None:
            N = self.exponent
            units = [u for u in range(1, N + 1) if gcd(u, N) == 1]
            seen = set()
            orbits = []
            for chi in self.elements:
                if chi in seen:
                    continue
                orb = sorted({tuple(u * a % n for a, n in zip(chi, self.cycle_type)) for u in units})
                seen.update(orb)
                orbits.append(orb)
            orbits.sort(key=lambda o: o[0])
            self._orbits = orbits
        return self._orbits

    def characters(self):
        """One representative (the lexicographically smallest) per orbit."""
        return [o[0] for o in self.galois_orbits()]

    def components(self):
        return [(cyclotomic_field(self.character_order(chi)), 1) for chi in self.characters()]

    def character_value(self, chi, g):
        """chi(g) inside Q(zeta_{ord chi})."""
        N = self.exponent
        d = self.character_order(chi)
        K = cyclotomic_field(d)
        e = sum(a * x * (N // n) for a, x, n in zip(chi, g, self.cycle_type)) % N
        j = e // (N // d)
        if d == 1:
            return K.one()
        if d == 2:
            return K.element((-1) ** j)
        return root_of_unity(d, K) ** j

    def represent(self, a):
        out = []
        for chi in self.characters():
            K = cyclotomic_field(self.character_order(chi))
            acc = K.zero()
            for i, x in enumerate(a):
                if x != 0:
                    acc = acc + self.character_value(chi, self.elements[i]) * x
            out.append([[acc]])
        return out


class MatrixOrder(OrderSpec):
    """M_n(base); coordinates are row-major blocks of base coordinates."""

    def __init__(self, n, base):
        if n < 1:
            raise ValueError("matrix size must be positive")
        self.n = n
        self.base = base
        self.dim = n * n * base.dim

    def __eq__(self, other):
        return isinstance(other, MatrixOrder) and self.n == other.n and self.base == other.base

    def __hash__(self):
        return hash(("M", self.n, self.base))

    def __repr__(self):
        return f"M_{self.n}({self.base!r})"

    def describe(self):
        return {"order": "matrix", "n": self.n, "base": self.base.describe()}

    def entries(self, a):
        bd = self.base.dim
        return [[tuple(a[(i * self.n + j) * bd:(i * self.n + j + 1) * bd]) for j in range(self.n)] for i in range(self.n)]

    def from_entries(self, rows):
        out = []
        for r in rows:
            for x in r:
                out.extend(self.base.element(x))
        return tuple(out)

    def components(self):
        return [(K, k * self.n) for K, k in self.base.components()]

    def mul(self, a, b):
        A, B = self.entries(a), self.entries(b)
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                acc = self.base.zero()
                for k in range(self.n):
                    acc = self.base.add(acc, self.base.mul(A[i][k], B[k][j]))
                row.append(acc)
            rows.append(row)
        return self.from_entries(rows)

    def one(self):
        return self.from_entries(
            [[self.base.one() if i == j else self.base.zero() for j in range(self.n)] for i in range(self.n)]
        )

    def represent(self, a):
        ents = self.entries(a)
        imgs = [[self.base.represent(x) for x in row] for row in ents]
        out = []
        for c, (K, k) in enumerate(self.base.components()):
            size = self.n * k
            big = [[K.zero() for _ in range(size)] for _ in range(size)]
            for i in range(self.n):
                for j in range(self.n):
                    blk = imgs[i][j][c]
                    for r in range(k):
                        for s in range(k):
                            big[i * k + r][j * k + s] = blk[r][s]
            out.append(big)
        return out


class WedderburnData(OrderSpec):
    """Explicit components with representation images of each basis element.

    ``components`` is a list of dicts with keys ``field`` (a NumberField, the
    center K_i), ``k`` (matrix size) and ``images`` (one k x k matrix over
    ``splitting_field`` per basis element).  ``splitting_field`` defaults to
    ``field``; when it is larger, reduced norms must descend to ``field``,
    which is only supported for ``field`` = Q.

    Structure constants are recovered from the images (their products must
    stay in the Q-span of the images, and the images must be Q-linearly
    independent); a supplied ``structure_constants`` table is checked
    against the images instead.
    """

    def __init__(self, components, structure_constants=None):
        if not components:
            raise MalformedAlgebraError("at least one component is required")
        self.comps = []
        dim = None
        for c in components:
            K = c["field"]
            L = c.get("splitting_field", K)
            k = int(c["k"])
            imgs = [[[L.element(x) for x in row] for row in m] for m in c["images"]]
            if dim is None:
                dim = len(imgs)
            if len(imgs) != dim:
                raise MalformedAlgebraError("every component needs one image per basis element")
            for m in imgs:
                if len(m) != k or any(len(r) != k for r in m):
                    raise MalformedAlgebraError(f"images must be {k}x{k} matrices")
            if L != K and K.degree != 1:
                raise MalformedAlgebraError("splitting fields are only supported over center Q")
            self.comps.append((K, L, k, imgs))
        self.dim = dim
        self._flat = [self._flatten_basis(j) for j in range(dim)]
        if M.rank(M.transpose(self._flat)) != dim:
            raise MalformedAlgebraError("representation is not injective on the basis")
        self.structure = self._derive_structure()
        if structure_constants is not None:
            for i in range(dim):
                for j in range(dim):
                    given = tuple(Fraction(x) for x in structure_constants[i][j])
                    if given != self.structure[i][j]:
                        raise MalformedAlgebraError(
                            f"representation is not multiplicative on basis product ({i}, {j})"
                        )
        self._one = self._find_one()

    def _flatten_images(self, mats):
        out = []
        for (K, L, k, _), m in zip(self.comps, mats):
            for row in m:
                for x in row:
                    out.extend(L.element(x).coeffs)
        return out

    def _flatten_basis(self, j):
        return self._flatten_images([imgs[j] for (_, _, _, imgs) in self.comps])

    def _solve_coords(self, flat):
        sol = M.solve(M.transpose(self._flat), flat)
        if sol is None:
            return None
        return tuple(sol)

    def _derive_structure(self):
        table = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                prods = [M.matmul(imgs[i], imgs[j]) for (_, _, _, imgs) in self.comps]
                coords = self._solve_coords(self._flatten_images(prods))
                if coords is None:
                    raise MalformedAlgebraError(f"product of basis elements {i} and {j} leaves the span")
                row.append(coords)
            table.append(row)
        return table

    def _find_one(self):
        ids = [M.identity(k, L.one(), L.zero()) for (_, L, k, _) in self.comps]
        coords = self._solve_coords(self._flatten_images(ids))
        if coords is None:
            raise MalformedAlgebraError("identity is not in the span of the images")
        return coords

    def components(self):
        return [(K, k) for (K, _, k, _) in self.comps]

    def mul(self, a, b):
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                for t, c in enumerate(self.structure[i][j]):
                    if c:
                        out[t] += x * y * c
        return tuple(out)

    def one(self):
        return self._one

    def represent(self, a):
        out = []
        for K, L, k, imgs in self.comps:
            acc = [[L.zero() for _ in range(k)] for _ in range(k)]
            for j, x in enumerate(a):
                if x != 0:
                    acc = M.add(acc, M.scale(imgs[j], x))
            out.append(acc)
        return out

    def splitting_fields(self):
        return [L for (_, L, _, _) in self.comps]

    def describe(self):
        comps = []
        for K, L, k, imgs in self.comps:
            d = {
                "field": [str(c) for c in K.defining_polynomial],
                "k": k,
                "images": [[[[str(c) for c in x.coeffs] for x in row] for row in m] for m in imgs],
            }
            if L != K:
                d["splitting_field"] = [str(c) for c in L.defining_polynomial]
            comps.append(d)
        return {"order": "wedderburn", "components": comps}

    def __eq__(self, other):
        return isinstance(other, WedderburnData) and self.describe() == other.describe()

    def __hash__(self):
        return hash(repr(self.describe()))


# --- operations ----------------------------------------------------------

def center_decomposition(spec):
    return list(spec.components())


def _component_matrix(spec, m, c):
    """rho_c applied entrywise to a square matrix over A, as one big matrix."""
    n = len(m)
    imgs = [[spec.represent(spec.element(x))[c] for x in row] for row in m]
    k = len(imgs[0][0]) if n else 0
    big = [[None] * (n * k) for _ in range(n * k)]
    for i in range(n):
        for j in range(n):
            blk = imgs[i][j]
            for r in range(k):
                for s in range(k):
                    big[i * k + r][j * k + s] = blk[r][s]
    return big


def component_matrices(spec, m):
    """[rho_i(m)] for a square matrix ``m`` over A."""
    if not m:
        return [[] for _ in spec.components()]
    return [_component_matrix(spec, m, c) for c in range(len(spec.components()))]


def _descend(spec, c, value):
    K, _ = spec.components()[c]
    if isinstance(spec, WedderburnData):
        _, L, _, _ = spec.comps[c]
        if L != K:
            if not value.is_rational():
                raise DescentError(f"component {c}: reduced norm {value} does not lie in {K!r}")
            return K.element(value.to_rational())
    if isinstance(value, NFElement):
        return K.element(value) if value.field != K else value
    return K.element(value)


def reduced_norm(m, spec):
    """Componentwise det of rho_i(m) for a square matrix ``m`` over A."""
    comps = spec.components()
    if not m:
        return CenterElement(K.one() for K, _ in comps)
    out = []
    for c, big in enumerate(component_matrices(spec, m)):
        out.append(_descend(spec, c, M.det(big)))
    return CenterElement(out)


def reduced_charpoly(m, spec, d=1):
    """Per-component polynomial Nrd(1 - m*T^d), coefficients in K_i."""
    out = []
    comps = spec.components()
    for c, big in enumerate(component_matrices(spec, m)):
        poly = M.det_one_minus(big, d) if big else (Fraction(1),)
        L = spec.comps[c][1] if isinstance(spec, WedderburnData) else comps[c][0]
        out.append(tuple(_descend(spec, c, x if isinstance(x, NFElement) else L.element(x)) for x in poly))
    return out


def reduced_rank(module_dims, spec):
    """dims_i / k_i per component, where dims_i is the K_i-dimension of e_i M."""
    comps = spec.components()
    if len(module_dims) != len(comps):
        raise ValueError(f"expected {len(comps)} dimensions, got {len(module_dims)}")
    out = []
    for d, (K, k) in zip(module_dims, comps):
        if d % k:
            raise NonDivisibleError(f"dimension {d} is not a multiple of the matrix size {k}")
        out.append(d // k)
    return tuple(out)


def _check_nonzero(*elems):
    for a in elems:
        for i, x in enumerate(a):
            if x == 0:
                raise ZeroComponentError(f"component {i} is zero")


def unit_modulo_integers(alpha, beta):
    """True iff alpha_i/beta_i and its inverse are algebraic integers for all i."""
    _check_nonzero(alpha, beta)
    for a, b in zip(alpha, beta):
        r = a / b
        if not (is_algebraic_integer(r) and is_algebraic_integer(1 / r)):
            return False
    return True


def _l_integral(coeffs, ell):
    return all(Fraction(c).denominator % ell for c in coeffs)


def is_l_adic_unit(alpha, ell):
    """True iff every alpha_i and alpha_i^{-1} have ell-integral minimal polynomials."""
    _check_nonzero(alpha)
    for a in alpha:
        if not isinstance(a, NFElement):
            a = QQ.element(a)
        mp = a.minpoly()
        mpi = (1 / a).minpoly()
        if not (_l_integral(mp, ell) and _l_integral(mpi, ell)):
            return False
    return True


def galois_conjugates(a, m):
    """Images of ``a`` in Q(zeta_m) under zeta -> zeta^u, u in (Z/m)^x."""
    K = a.field
    if K.degree == 1:
        return [a]
    z = root_of_unity(m, K)
    out = []
    for u in range(1, m + 1):
        if gcd(u, m) != 1:
            continue
        zu = z**u
        acc = K.zero()
        power = K.one()
        for c in a.coeffs:
            acc = acc + power * c
            power = power * zu
        out.append(acc)
    return out


def component_norm_poly(poly, m):
    """Product over Galois conjugates of a polynomial with Q(zeta_m) coefficients."""
    if not poly:
        return ()
    K = poly[0].field if isinstance(poly[0], NFElement) else QQ
    if K.degree == 1:
        return tuple(Fraction(c.to_rational() if isinstance(c, NFElement) else c) for c in poly)
    conj = [galois_conjugates(K.element(c) if not isinstance(c, NFElement) else c, m) for c in poly]
    acc = (K.one(),)
    for j in range(len(conj[0])):
        acc = P.mul(acc, P.trim([c[j] for c in conj]))
    return tuple(x.to_rational() for x in acc)


# --- JSON ----------------------------------------------------------------

def _field_from_json(obj):
    if obj in (None, "Q", "QQ"):
        return QQ
    if isinstance(obj, dict) and "cyclotomic" in obj:
        return cyclotomic_field(int(obj["cyclotomic"]))
    if isinstance(obj, list):
        return NumberField([Fraction(str(c)) for c in obj])
    raise ScenarioError(f"cannot read a number field from {obj!r}")


def _nf_entry(L, x):
    if isinstance(x, list):
        return L.from_poly([Fraction(str(c)) for c in x])
    return L.element(Fraction(str(x)))


def order_from_json(obj):
    if not isinstance(obj, dict) or "order" not in obj:
        raise ScenarioError("order spec must be an object with an 'order' key")
    kind = obj["order"]
    if kind == "Z":
        return IntegerRing()
    if kind == "ZG":
        if "cycle_type" not in obj:
            raise ScenarioError("ZG order needs 'cycle_type'")
        return AbelianGroupRing(obj["cycle_type"])
    if kind == "matrix":
        if "n" not in obj or "base" not in obj:
            raise ScenarioError("matrix order needs 'n' and 'base'")
        return MatrixOrder(int(obj["n"]), order_from_json(obj["base"]))
    if kind == "wedderburn":
        comps = []
        for c in obj.get("components", []):
            K = _field_from_json(c.get("field"))
            L = _field_from_json(c["splitting_field"]) if "splitting_field" in c else K
            imgs = [[[_nf_entry(L, x) for x in row] for row in m] for m in c["images"]]
            comps.append({"field": K, "splitting_field": L, "k": c["k"], "images": imgs})
        return WedderburnData(comps, obj.get("structure_constants"))
    raise ScenarioError(f"unknown order kind {kind!r}")
