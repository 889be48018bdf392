"""Dense exact linear algebra on lists of rows.

Entries may be ``int``, ``Fraction`` or number-field elements.  Integer-only
input to :func:`det` stays integral throughout (fraction-free elimination).
"""

from fractions import Fraction

from ..errors import NotInvertibleError
from . import poly as P


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _f(x):
    return Fraction(x) if _is_int(x) else x


def shape(m):
    return (len(m), len(m[0]) if m else 0)


def zeros(r, c, zero=0):
    return [[zero] * c for _ in range(r)]


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def copy(m):
    return [list(r) for r in m]


def transpose(m):
    if not m:
        return []
    return [list(c) for c in zip(*m)]


def matmul(a, b):
    if not a:
        return []
    n = len(b)
    if n == 0:
        return [[0] * 0 for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        out_row = []
        for j in range(cols):
            acc = 0
            for k in range(n):
                x = row[k]
                if x == 0:
                    continue
                y = b[k][j]
                if y == 0:
                    continue
                acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x != 0 and y != 0), 0) for row in a]


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    return [[x * c for x in r] for r in a]


def is_zero(m):
    return all(x == 0 for r in m for x in r)


def block_diag(*blocks, zero=0):
    n = sum(len(b) for b in blocks)
    out = zeros(n, n, zero)
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return out


def det(m):
    """Determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise ValueError("det of a non-square matrix")
    a = copy(m)
    integral = all(_is_int(x) for r in a for x in r)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num // prev if integral else num / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rref(m):
    """Reduced row echelon form over a field; returns (R, pivot_columns)."""
    a = [[_f(x) for x in r] for r in m]
    rows, cols = shape(a)
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = None
        for i in range(r, rows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m):
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def kernel(m, ncols=None):
    """Basis of the right kernel as a list of column vectors."""
    cols = shape(m)[1] if m else ncols
    if cols is None:
        raise ValueError("kernel of an empty matrix needs ncols")
    if not m:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -r[row][fc]
        basis.append(v)
    return basis


def column_space(m):
    """Basis of the column space (pivot columns of ``m``)."""
    if not m or not m[0]:
        return []
    _, pivots = rref(m)
    return [[m[i][c] for i in range(len(m))] for c in pivots]


def solve(a, b):
    """One solution x of a x = b (b a vector), or None if inconsistent."""
    rows, cols = shape(a)
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row, pc in enumerate(pivots):
        x[pc] = r[row][cols]
    return x


def inverse(m):
    n = len(m)
    aug = [list(m[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise NotInvertibleError("singular matrix")
    return [row[n:] for row in r]


def charpoly(m):
    """det(T*I - m) by Faddeev-LeVerrier, coefficients low to high."""
    n = len(m)
    if n == 0:
        return (Fraction(1),)
    a = [[_f(x) for x in r] for r in m]
    coeffs = [None] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n, n, Fraction(0))
    c = Fraction(1)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        mk = matmul(a, mk)
        for i in range(n):
            mk[i][i] = mk[i][i] + c
        am = matmul(a, mk)
        tr = sum((am[i][i] for i in range(n)), Fraction(0))
        c = -tr / k
        coeffs[n - k] = c
    return P.trim(coeffs)


def det_one_minus(m, d=1):
    """det(1 - m*T^d) as a polynomial in T (constant term 1)."""
    n = len(m)
    cp = charpoly(m)  # det(T - m) = sum c_k T^k
    # det(1 - mT) = T^n det(1/T - m) = reverse of cp
    rev = P.reverse(cp, n)
    return P.substitute_power(rev, d)
