"""Dense univariate polynomials over an exact field.

Polynomials are plain tuples of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  Coefficients may be
``Fraction`` or number-field elements; bare ``int`` inputs are promoted to
``Fraction`` so that division never falls back to floats.
"""

from fractions import Fraction


def as_field(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


def trim(p):
    p = [as_field(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p):
    """Degree of ``p``; the zero polynomial has degree -1."""
    return len(p) - 1


def add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return trim(out)


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def power(a, e):
    result = (Fraction(1),)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def divmod_poly(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(a) < len(b):
        return (), trim(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        f = c / lead
        quot[i - db] = f
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - f * b[j]
    return trim(quot), trim(a[:db])


def monic(a):
    if not a:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def gcd(a, b):
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), s0, t0
    lead = r0[-1]
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def substitute_power(p, d):
    """``p(T^d)``."""
    if not p:
        return ()
    out = [0] * ((len(p) - 1) * d + 1)
    for i, c in enumerate(p):
        out[i * d] = c
    return trim(out)


def reverse(p, n):
    """Coefficients of ``T^n * p(1/T)`` for ``n >= deg p``."""
    out = [0] * (n + 1)
    for i, c in enumerate(p):
        out[n - i] = c
    return trim(out)


def linear_factor_multiplicity(p, x):
    """Largest ``k`` with ``(T - x)^k`` dividing ``p`` and the cofactor.

    ``p`` must be nonzero.
    """
    k = 0
    root_factor = (-as_field(x), Fraction(1))
    while p and evaluate(p, x) == 0:
        p, r = divmod_poly(p, root_factor)
        assert not r
        k += 1
    return k, p


def to_string(p, var="T"):
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        cs = str(c)
        if " " in cs or ("+" in cs[1:]) or ("-" in cs[1:]):
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
        elif cs == "1":
            terms.append(var if i == 1 else f"{var}^{i}")
        elif cs == "-1":
            terms.append("-" + (var if i == 1 else f"{var}^{i}"))
        else:
            terms.append(f"{cs}*{var}" if i == 1 else f"{cs}*{var}^{i}")
    return " + ".join(terms).replace("+ -", "- ")
