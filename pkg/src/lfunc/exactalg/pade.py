"""Rational functions and Pade reconstruction with a guard band."""

from fractions import Fraction

from ..errors import InsufficientPrecisionError, NoSolutionError
from . import matrix as M
from . import poly as P
from .series import TruncatedSeries, series_inverse


class RationalFunction:
    """``numerator/denominator`` with coprime parts and ``denominator(0) == 1``."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=(1,), normalize=True):
        num = P.trim(numerator)
        den = P.trim(denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if normalize:
            if not num:
                den = (Fraction(1),)
            else:
                g = P.gcd(num, den)
                if len(g) > 1:
                    num, _ = P.divmod_poly(num, g)
                    den, _ = P.divmod_poly(den, g)
            if den[0] == 0:
                raise ValueError("denominator vanishes at T = 0")
            c = den[0]
            if c != 1:
                num = P.scale(num, 1 / c)
                den = P.scale(den, 1 / c)
        self.numerator = num
        self.denominator = den

    @classmethod
    def constant(cls, c):
        return cls((c,), (1,))

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            return RationalFunction(P.scale(self.numerator, other), self.denominator)
        return RationalFunction(P.mul(self.numerator, other.numerator), P.mul(self.denominator, other.denominator))

    __rmul__ = __mul__

    def inverse(self):
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(P.power(self.numerator, e), P.power(self.denominator, e))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return P.mul(self.numerator, other.denominator) == P.mul(other.numerator, self.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def expand(self, precision):
        num = TruncatedSeries(list(self.numerator) or [0], precision)
        den = TruncatedSeries(list(self.denominator), precision)
        return num * series_inverse(den)

    def evaluate(self, x):
        d = P.evaluate(self.denominator, x)
        if d == 0:
            raise ZeroDivisionError("pole at the evaluation point")
        return P.evaluate(self.numerator, x) / d

    def degrees(self):
        return (P.degree(self.numerator), P.degree(self.denominator))

    def __repr__(self):
        n = P.to_string(self.numerator)
        if self.denominator == (1,):
            return n
        return f"({n})/({P.to_string(self.denominator)})"


def pade_reconstruct(s, deg_num, deg_den, guard=3):
    """Find P/Q with deg P <= deg_num, deg Q <= deg_den and P/Q == s.

    The linear system for Q uses every coefficient up to the precision of
    ``s``; at least ``guard`` of those equations are redundant if the series
    is genuinely rational within the bounds, so a spurious fit is detected.
    """
    N = s.precision
    m, n = deg_num, deg_den
    if m < 0 or n < 0 or guard < 0:
        raise ValueError("degree bounds and guard must be nonnegative")
    if N < m + n + guard:
        raise InsufficientPrecisionError(
            f"precision {N} < {m} + {n} + guard {guard}; need {m + n + guard - N} more coefficient(s)"
        )
    c = s.coefficients

    def coef(k):
        return c[k] if k >= 0 else 0

    # sum_{j=1..n} q_j c_{k-j} = -c_k for k = m+1..N
    rows = []
    rhs = []
    for k in range(m + 1, N + 1):
        rows.append([coef(k - j) for j in range(1, n + 1)])
        rhs.append(-c[k])
    if n == 0:
        if any(r != 0 for r in rhs):
            raise NoSolutionError(f"series is not a polynomial of degree <= {m}")
        q = []
    else:
        q = M.solve(rows, rhs)
        if q is None:
            raise NoSolutionError(f"no denominator of degree <= {n} fits the series with numerator degree <= {m}")
    Q = P.trim([1] + list(q))
    num = []
    for k in range(m + 1):
        acc = 0
        for j in range(min(k, len(Q) - 1) + 1):
            acc = acc + Q[j] * c[k - j]
        num.append(acc)
    f = RationalFunction(num, Q)
    if not f.expand(N).agrees_with(s):
        raise NoSolutionError("reconstruction disagrees with the guard band")
    return f
