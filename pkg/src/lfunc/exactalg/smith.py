"""Smith and Hermite normal forms over the integers."""

from fractions import Fraction


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _as_int_matrix(m):
    out = []
    for r in m:
        row = []
        for x in r:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("smith_normal_form needs an integer matrix")
                x = x.numerator
            row.append(int(x))
        out.append(row)
    return out


def smith_normal_form(m, nrows=None, ncols=None):
    """Return ``(U, D, V)`` with ``U*m*V == D``, U and V unimodular.

    ``D`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``.  Empty
    matrices need ``nrows``/``ncols`` to fix the shape.
    """
    a = _as_int_matrix(m)
    rows = len(a) if nrows is None else nrows
    cols = (len(a[0]) if a else 0) if ncols is None else ncols
    if not a:
        a = [[0] * cols for _ in range(rows)]
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):
        # row dst += f * row src
        if f:
            a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        if f:
            for r in a:
                r[dst] += f * r[src]
            for r in V:
                r[dst] += f * r[src]

    t = 0
    while t < min(rows, cols):
        # pick the smallest nonzero entry in the remaining block as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if done:
                # enforce divisibility on the rest of the block
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % a[t][t]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(bad, t, 1)
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, a, V


def elementary_divisors(m, nrows=None, ncols=None):
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    _, D, _ = smith_normal_form(m, nrows, ncols)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def hermite_normal_form(m):
    """Row-style HNF: returns (H, U) with U*m == H, H upper echelon.

    Pivots are positive and entries above a pivot are reduced to
    ``[0, pivot)``.  Zero rows are kept at the bottom.
    """
    a = _as_int_matrix(m)
    rows = len(a)
    cols = len(a[0]) if a else 0
    U = _identity(rows)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        while True:
            nz = [i for i in range(r, rows) if a[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            U[r], U[piv] = U[piv], U[r]
            clean = True
            for i in range(r + 1, rows):
                if a[i][c]:
                    f = a[i][c] // a[r][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                    U[i] = [x - f * y for x, y in zip(U[i], U[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            f = a[i][c] // a[r][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                U[i] = [x - f * y for x, y in zip(U[i], U[r])]
        r += 1
    return a, U


def lattice_basis(generators):
    """A Z-basis (as rows) of the lattice spanned by integer row vectors."""
    if not generators:
        return []
    H, _ = hermite_normal_form(generators)
    return [row for row in H if any(row)]


def integer_kernel(m, ncols=None):
    """Z-basis (as column vectors) of ``{v in Z^n : m v = 0}``."""
    cols = (len(m[0]) if m else 0) if ncols is None else ncols
    rows = len(m)
    _, D, V = smith_normal_form(m, rows, cols)
    rank = sum(1 for i in range(min(rows, cols)) if D[i][i])
    return [[V[i][j] for i in range(cols)] for j in range(rank, cols)]
