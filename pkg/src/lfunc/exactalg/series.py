"""Truncated power series ``c_0 + c_1 T + ... + c_N T^N + O(T^{N+1})``."""

from fractions import Fraction

from ..errors import NotInvertibleError
from . import poly as P


class TruncatedSeries:
    __slots__ = ("coefficients", "precision")

    def __init__(self, coefficients, precision=None):
        c = [P.as_field(x) for x in coefficients]
        if precision is None:
            precision = len(c) - 1
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        zero = Fraction(0)
        c = c[: precision + 1] + [zero] * (precision + 1 - len(c))
        self.coefficients = tuple(c)
        self.precision = precision

    @classmethod
    def from_polynomial(cls, p, precision):
        return cls(list(p), precision)

    def __len__(self):
        return self.precision + 1

    def __getitem__(self, k):
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, n):
        return TruncatedSeries(self.coefficients, min(n, self.precision))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.precision)
        n = min(self.precision, other.precision)
        return TruncatedSeries([a + b for a, b in zip(self.coefficients[: n + 1], other.coefficients[: n + 1])], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coefficients], self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coefficients], self.precision)
        n = min(self.precision, other.precision)
        a, b = self.coefficients, other.coefficients
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                x = a[i]
                if x == 0:
                    continue
                y = b[k - i]
                if y == 0:
                    continue
                acc = acc + x * y
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return series_inverse(self) ** (-e)
        result = TruncatedSeries([1], self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * series_inverse(other)
        return TruncatedSeries([a / other for a in self.coefficients], self.precision)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.precision == other.precision and all(
            a == b for a, b in zip(self.coefficients, other.coefficients)
        )

    def agrees_with(self, other):
        """Coefficientwise equality up to the smaller precision."""
        n = min(self.precision, other.precision)
        return all(self.coefficients[k] == other.coefficients[k] for k in range(n + 1))

    def __repr__(self):
        body = P.to_string(P.trim(self.coefficients)) if any(c != 0 for c in self.coefficients) else "0"
        return f"{body} + O(T^{self.precision + 1})"


def series_inverse(s):
    c = s.coefficients
    if c[0] == 0:
        raise NotInvertibleError("series with zero constant term is not invertible")
    inv0 = 1 / c[0]
    out = [inv0]
    for k in range(1, s.precision + 1):
        acc = 0
        for i in range(1, k + 1):
            if c[i] != 0:
                acc = acc + c[i] * out[k - i]
        out.append(-acc * inv0)
    return TruncatedSeries(out, s.precision)


def series_exp_log_counts(counts, precision):
    """``exp(sum_{e>=1} N_e T^e / e)`` for a list ``counts = [N_1, N_2, ...]``."""
    a = [Fraction(0)] + [Fraction(n, e) for e, n in enumerate(counts[:precision], start=1)]
    a += [Fraction(0)] * (precision + 1 - len(a))
    # Z' = Z * a'  =>  k z_k = sum_{j=1..k} j a_j z_{k-j}
    z = [Fraction(1)]
    for k in range(1, precision + 1):
        acc = sum((j * a[j] * z[k - j] for j in range(1, k + 1)), Fraction(0))
        z.append(acc / k)
    return TruncatedSeries(z, precision)
