"""Finite fields F_{p^k} with elements encoded as integers.

An element ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` (mod the modulus) is
stored as the integer ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.  Prime-field
elements are therefore the integers ``0..p-1`` in every extension.
Multiplication goes through exp/log tables built on first use.
"""

from functools import lru_cache

from ..errors import NotIrreducibleError


# --- polynomials over F_p as coefficient lists (low to high) ---------------

def _fp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            f = c * inv % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * m[j]) % p
    return _fp_trim([c % p for c in a[:dm]])


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_mod(out, m, p)


def _fp_powmod(a, e, m, p):
    result = [1]
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _fp_mulmod(base, base, m, p)
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(a), _fp_trim(b)
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def is_irreducible_mod_p(modulus, p):
    """gcd(x^{p^i} - x, f) = 1 for 0 < i < k and x^{p^k} = x mod f."""
    f = [c % p for c in modulus]
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    xp = [0, 1]
    for i in range(1, k + 1):
        xp = _fp_powmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        diff = _fp_trim(diff)
        if i < k:
            g = _fp_gcd(f, diff, p)
            if len(g) > 1:
                return False
        elif diff:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p, k):
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Candidates are ordered by the integer code ``sum c_i p^i`` of their
    non-leading coefficients, i.e. by ``(c_{k-1}, ..., c_0)``.
    """
    for code in range(p**k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if k > 1 and f[0] == 0:
            continue
        if is_irreducible_mod_p(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """F_{p^k}; ``order`` is the cardinality p^k."""

    def __init__(self, p, k=1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise NotIrreducibleError("modulus must be monic of degree k")
            if not is_irreducible_mod_p(modulus, p):
                raise NotIrreducibleError(f"{modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.order = p**k
        self.q = self.order
        self.modulus = modulus
        self._exp = None
        self._log = None

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # encoding
    def to_poly(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_poly(self, coeffs):
        coeffs = _fp_mod([c % self.p for c in coeffs], list(self.modulus), self.p) if len(coeffs) > self.k else coeffs
        out = 0
        for c in reversed(list(coeffs)):
            out = out * self.p + (c % self.p)
        return out

    def from_int(self, n):
        return n % self.p

    @property
    def gen(self):
        """The class of x."""
        return self.from_poly([0, 1]) if self.k > 1 else self.from_poly([(-self.modulus[0]) % self.p])

    # tables
    def _build_tables(self):
        Q = self.order
        m = list(self.modulus)
        factors = _prime_factors(Q - 1)
        for cand in range(1, Q):
            c = self.to_poly(cand)
            if Q == 2:
                g = cand
                break
            ok = True
            for r in factors:
                if _fp_trim(_fp_powmod(_fp_trim(c), (Q - 1) // r, m, self.p)) == [1]:
                    ok = False
                    break
            if ok:
                g = cand
                break
        exp = [0] * (Q - 1)
        log = [None] * Q
        cur = [1]
        gp = _fp_trim(self.to_poly(g))
        for i in range(Q - 1):
            e = self.from_poly(cur) if cur else 0
            exp[i] = e
            log[e] = i
            cur = _fp_mulmod(cur, gp, m, self.p)
        self.primitive_element = g
        self._exp = exp
        self._log = log
        if self.p != 2 and self.k > 1:
            # Zech logarithms: g^zech[i] = 1 + g^i (None when 1 + g^i = 0)
            zech = [None] * (Q - 1)
            for i in range(Q - 1):
                t = self._digit_add(1, exp[i])
                zech[i] = log[t] if t else None
            self._zech = zech

    @property
    def exp_table(self):
        if self._exp is None:
            self._build_tables()
        return self._exp

    @property
    def log_table(self):
        if self._log is None:
            self._build_tables()
        return self._log

    @property
    def primitive(self):
        if self._exp is None:
            self._build_tables()
        return self.primitive_element

    def log(self, a):
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self.log_table[a]

    def exp(self, i):
        return self.exp_table[i % (self.order - 1)]

    # arithmetic
    def add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % p
        if not a:
            return b
        if not b:
            return a
        if self._exp is None:
            return self._digit_add(a, b)
        log = self._log
        la = log[a]
        z = self._zech[(log[b] - la) % (self.order - 1)]
        if z is None:
            return 0
        return self._exp[(la + z) % (self.order - 1)]

    def _digit_add(self, a, b):
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        p = self.p
        if p == 2 or a == 0:
            return a
        if self.k == 1:
            return (-a) % p
        out = 0
        mult = 1
        while a:
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        log = self.log_table
        return self._exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp_at(-self.log_table[a])

    def _exp_at(self, i):
        return self.exp_table[i % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self.k == 1:
            return pow(a, e % (self.p - 1), self.p)
        return self._exp_at(self.log_table[a] * e)

    def elements(self):
        return range(self.order)

    def is_square(self, a):
        if a == 0 or self.p == 2:
            return True
        return self.log(a) % 2 == 0

    def sqrt(self, a):
        """Some square root of ``a`` or None."""
        if a == 0:
            return 0
        if self.p == 2:
            # squaring is bijective
            return self._exp_at(self.log(a) * (self.order // 2))
        l = self.log(a)
        if l % 2:
            return None
        return self._exp_at(l // 2)

    def element_degree(self, a, q):
        """Smallest d with a^{q^d} = a (the degree of F_q(a) over F_q)."""
        d = 1
        b = frobenius(a, self, q)
        while b != a:
            b = frobenius(b, self, q)
            d += 1
        return d


@lru_cache(maxsize=None)
def get_field(p, k=1):
    return FiniteField(p, k)


def frobenius(e, field, q=None):
    """``e^q`` in ``field``; ``q`` defaults to the characteristic."""
    if q is None:
        q = field.p
    if e == 0:
        return 0
    if field.k == 1:
        return e
    return field.exp_table[(field.log_table[e] * q) % (field.order - 1)]


@lru_cache(maxsize=None)
def embedding(small, big):
    """Images of the encoded elements of ``small`` inside ``big`` (a tuple).

    Requires ``small.k`` to divide ``big.k``.  The image of the generator is
    a root of the small modulus inside the subfield of ``big``.
    """
    if small.p != big.p or big.k % small.k:
        raise ValueError(f"{small} does not embed in {big}")
    if small.k == 1:
        return tuple(range(small.order))
    qs = small.order
    h = big.exp((big.order - 1) // (qs - 1))
    root = None
    cand = 1
    for _ in range(qs - 1):
        if _eval_in(big, small.modulus, cand) == 0:
            root = cand
            break
        cand = big.mul(cand, h)
    if root is None:
        raise AssertionError("no root of the small modulus found")
    images = []
    for a in range(qs):
        coeffs = small.to_poly(a)
        acc = 0
        for c in reversed(coeffs):
            acc = big.add(big.mul(acc, root), c)
        images.append(acc)
    return tuple(images)


def _eval_in(field, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c % field.p)
    return acc


# --- univariate polynomials over a finite field --------------------------

def upoly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def upoly_eval(F, a, x):
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def upoly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return upoly_trim(out)


def upoly_divmod(F, a, b):
    a = upoly_trim(a)
    b = upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    inv = F.inv(b[-1])
    db = len(b) - 1
    q = [0] * (len(a) - db)
    a = list(a)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = F.mul(c, inv)
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = F.sub(a[i - db + j], F.mul(f, b[j]))
    return upoly_trim(q), upoly_trim(a[:db])


def upoly_mod(F, a, b):
    return upoly_divmod(F, a, b)[1]


def upoly_monic(F, a):
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(c, inv) for c in a]


def upoly_gcd(F, a, b):
    a, b = upoly_trim(a), upoly_trim(b)
    while b:
        a, b = b, upoly_mod(F, a, b)
    return upoly_monic(F, a)


def upoly_powmod(F, a, e, m):
    result = [1]
    base = upoly_mod(F, a, m)
    while e:
        if e & 1:
            result = upoly_mod(F, upoly_mul(F, result, base), m)
        e >>= 1
        if e:
            base = upoly_mod(F, upoly_mul(F, base, base), m)
    return result


def upoly_sub(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return upoly_trim([F.sub(x, y) for x, y in zip(a, b)])


def _split_roots(F, g):
    """Roots of a monic squarefree ``g`` that splits into distinct linear factors."""
    deg = len(g) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [F.neg(g[0])]
    if deg == 2 and F.p != 2:
        b, c = g[1], g[0]
        disc = F.sub(F.mul(b, b), F.mul(4 % F.p, c))
        s = F.sqrt(disc)
        inv2 = F.inv(2 % F.p)
        return [F.mul(F.sub(s, b), inv2), F.mul(F.sub(F.neg(s), b), inv2)]
    Q = F.order
    # equal-degree splitting with a deterministic sequence of shifts
    for t in range(Q):
        if F.p != 2:
            h = upoly_powmod(F, [t, 1], (Q - 1) // 2, g)
            h = upoly_sub(F, h, [1])
        else:
            # trace map of t*y
            base = upoly_mod(F, [0, t], g)
            acc = base
            cur = base
            for _ in range(F.k - 1):
                cur = upoly_mod(F, upoly_mul(F, cur, cur), g)
                acc = _upoly_add(F, acc, cur)
            h = acc
        d = upoly_gcd(F, g, h)
        if 0 < len(d) - 1 < deg:
            e, _ = upoly_divmod(F, g, d)
            return _split_roots(F, d) + _split_roots(F, upoly_monic(F, e))
    raise AssertionError("equal-degree splitting failed")


def _upoly_add(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return upoly_trim([F.add(x, y) for x, y in zip(a, b)])


def _rational_root_part(F, a):
    """gcd(a, y^Q - y): the product of the distinct linear factors of ``a``."""
    a = upoly_monic(F, upoly_trim(a))
    if len(a) <= 2:
        return a
    yq = upoly_powmod(F, [0, 1], F.order, a)
    return upoly_gcd(F, a, upoly_sub(F, yq, [0, 1]))


def count_roots(F, a):
    """Number of distinct roots in F of a nonzero polynomial ``a``."""
    a = upoly_trim(a)
    if not a:
        raise ValueError("zero polynomial has every element as a root")
    deg = len(a) - 1
    if deg == 0:
        return 0
    if deg == 1:
        return 1
    if deg == 2 and F.p != 2:
        disc = F.sub(F.mul(a[1], a[1]), F.mul(4 % F.p, F.mul(a[2], a[0])))
        if disc == 0:
            return 1
        return 2 if F.is_square(disc) else 0
    return len(_rational_root_part(F, a)) - 1


def find_roots(F, a):
    """Sorted list of the distinct roots in F of a nonzero polynomial ``a``."""
    a = upoly_trim(a)
    if not a:
        raise ValueError("zero polynomial has every element as a root")
    if len(a) == 1:
        return []
    if len(a) == 3 and F.p != 2:
        a = upoly_monic(F, a)
        disc = F.sub(F.mul(a[1], a[1]), F.mul(4 % F.p, a[0]))
        if not F.is_square(disc):
            return []
        return sorted(set(_split_roots(F, a)))
    g = _rational_root_part(F, a)
    return sorted(set(_split_roots(F, g)))
