"""Number fields Q[x]/(f) with canonical residue representation."""

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd

import sympy

from ..errors import NotInvertibleError, NotIrreducibleError
from . import poly as P


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot coerce {c!r} to a rational")


def _is_irreducible_over_q(coeffs):
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs))
    return sympy.Poly(expr, x, domain="QQ").is_irreducible


class NumberField:
    """``Q[x]/(f)`` for a monic irreducible ``f`` (coefficients low to high)."""

    def __init__(self, defining_polynomial, name=None, check=True):
        f = P.trim([_frac(c) for c in defining_polynomial])
        if len(f) < 2:
            raise NotIrreducibleError("defining polynomial must have positive degree")
        if f[-1] != 1:
            raise NotIrreducibleError("defining polynomial must be monic")
        if check and len(f) > 2 and not _is_irreducible_over_q(f):
            raise NotIrreducibleError(f"{P.to_string(f, 'x')} is reducible over Q")
        self.defining_polynomial = f
        self.degree = len(f) - 1
        self.name = name or ("Q" if self.degree == 1 and f[0] == 0 else f"Q[x]/({P.to_string(f, 'x')})")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_polynomial == other.defining_polynomial

    def __hash__(self):
        return hash(self.defining_polynomial)

    def __repr__(self):
        return f"NumberField({self.name})"

    def __call__(self, value):
        return self.element(value)

    def element(self, value):
        if isinstance(value, NFElement):
            if value.field == self:
                return value
            if value.field.degree == 1:
                return self.element(value.coeffs[0])
            raise TypeError(f"cannot move {value!r} into {self!r}")
        if isinstance(value, (int, Fraction, str)):
            return NFElement(self, (_frac(value),) + (Fraction(0),) * (self.degree - 1))
        return self.from_poly(value)

    def from_poly(self, coeffs):
        """Reduce an arbitrary polynomial in the generator."""
        c = P.trim([_frac(x) for x in coeffs])
        if len(c) > self.degree:
            _, c = P.divmod_poly(c, self.defining_polynomial)
        c = tuple(c) + (Fraction(0),) * (self.degree - len(c))
        return NFElement(self, c)

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def gen(self):
        """The class of ``x`` (for Q itself this is the root of ``f``)."""
        return self.from_poly((0, 1))

    def is_rational_field(self):
        return self.degree == 1


class NFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    # coercion helpers
    def _lift(self, other):
        if isinstance(other, NFElement):
            if other.field == self.field:
                return other
            if other.field.degree == 1:
                return self.field.element(other.to_rational())
            if self.field.degree == 1:
                return None
            raise TypeError("elements of different number fields")
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, NFElement):
                return other + self
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, NFElement):
                return -(other - self)
            return NotImplemented
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._lift(other)
        if o is None:
            if isinstance(other, NFElement):
                return other * self
            return NotImplemented
        if self.field.degree == 1:
            return NFElement(self.field, (self.coeffs[0] * o.coeffs[0],))
        return self.field.from_poly(P.mul(P.trim(self.coeffs), P.trim(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise NotInvertibleError("zero has no inverse")
        if self.field.degree == 1:
            return NFElement(self.field, (1 / self.coeffs[0],))
        g, s, _ = P.xgcd(P.trim(self.coeffs), self.field.defining_polynomial)
        # f irreducible, so g == 1
        return self.field.from_poly(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise NotInvertibleError("division by zero")
            return NFElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._lift(other)
        if o is None:
            if isinstance(other, NFElement):
                return other.field.element(self.to_rational()) / other
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, NFElement):
            if other.field == self.field:
                return self.coeffs == other.coeffs
            if other.field.degree == 1 and self.is_rational():
                return self.coeffs[0] == other.to_rational()
            if self.field.degree == 1 and other.is_rational():
                return self.to_rational() == other.coeffs[0]
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        if self.field.degree == 1:
            return True
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self):
        if self.field.degree == 1:
            return self.coeffs[0]
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def multiplication_matrix(self):
        """Matrix of ``y -> self*y`` in the power basis (columns are images)."""
        n = self.field.degree
        cols = []
        for j in range(n):
            basis = [0] * n
            basis[j] = 1
            cols.append((self * self.field.from_poly(basis)).coeffs)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def charpoly(self):
        from .matrix import charpoly

        return charpoly(self.multiplication_matrix())

    def minpoly(self):
        cp = self.charpoly()
        if len(cp) <= 2:
            return cp
        g = P.gcd(cp, P.derivative(cp))
        sqfree, _ = P.divmod_poly(cp, g)
        return P.monic(sqfree)

    def norm(self):
        cp = self.charpoly()
        n = self.field.degree
        return cp[0] * (-1) ** n

    def trace(self):
        return sum(self.coeffs[i] * _power_trace(self.field, i) for i in range(self.field.degree))

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return P.to_string(P.trim(self.coeffs), "z") if any(self.coeffs) else "0"

    __str__ = __repr__


def _power_trace(field, i):
    # trace of x^i, from the multiplication matrix
    e = field.from_poly([0] * i + [1])
    m = e.multiplication_matrix()
    return sum(m[k][k] for k in range(field.degree))


QQ = NumberField((0, 1), name="Q", check=False)


def rational(c):
    return QQ.element(c)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Phi_m by dividing x^m - 1 by Phi_d for every proper divisor d of m."""
    if m < 1:
        raise ValueError("m must be positive")
    num = P.trim([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            q, r = P.divmod_poly(num, cyclotomic_polynomial(d))
            assert not r
            num = q
    return tuple(num)


@lru_cache(maxsize=None)
def cyclotomic_field(m):
    """``Q(zeta_m)``; returns ``QQ`` for m <= 2."""
    if m <= 2:
        return QQ
    # Phi_m is irreducible, no need to factor it
    return NumberField(cyclotomic_polynomial(m), name=f"Q(zeta_{m})", check=False)


def root_of_unity(m, field=None):
    """The standard generator of ``mu_m`` inside ``field`` (default ``Q(zeta_m)``)."""
    K = field or cyclotomic_field(m)
    if m == 1:
        return K.one()
    if m == 2:
        return K.element(-1)
    if K.degree == 1:
        raise ValueError(f"Q has no primitive {m}-th root of unity")
    conductor = _field_conductor(K)
    if conductor is None or conductor % m:
        raise ValueError(f"{K!r} is not known to contain zeta_{m}")
    return K.gen() ** (conductor // m)


def _field_conductor(K):
    for m in range(3, 8 * K.degree * K.degree + 3):
        if K.defining_polynomial == cyclotomic_polynomial(m):
            return m
    return None


def is_algebraic_integer(a):
    """True iff the minimal polynomial of ``a`` over Q has integer coefficients."""
    if isinstance(a, (int, Fraction)):
        return Fraction(a).denominator == 1
    return all(c.denominator == 1 for c in a.minpoly())


def denominators_lcm(coeffs):
    out = 1
    for c in coeffs:
        d = Fraction(c).denominator
        out = out * d // igcd(out, d)
    return out
