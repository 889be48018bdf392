"""Fiber complexes of 1 - x*theta and refined Euler characteristics."""

from dataclasses import dataclass, field
from fractions import Fraction

from ..coeffalg import CenterElement
from ..errors import ComplexError, SemisimplicityError
from ..exactalg import matrix as M
from ..exactalg.smith import integer_kernel, smith_normal_form
from .complexes import (
    PerfectComplexEndo,
    beta0_matrix,
    columns,
    descend,
    fiber_of,
    field_cohomology,
    from_columns,
    mat_vec,
)
from .semisimple import complex_semisimple_at_zero

# (eps, eps'): chi = prod_i #H^i_tors^(eps (-1)^i) * |d(alpha)|^eps'.
# Frozen by calibrate_normalization(); see tests/test_acceptance.py.
NORMALIZATION = (-1, -1)


@dataclass
class IntegralFiber:
    """Integral cohomology of the fiber: free ranks, torsion invariants and
    the beta0 maps on H^i/torsion in chosen lattice bases."""

    free_ranks: dict
    torsion: dict
    beta0: dict

    def torsion_order(self, i):
        out = 1
        for t in self.torsion.get(i, []):
            out *= t
        return out


@dataclass
class FiberData:
    complex: PerfectComplexEndo
    x: Fraction
    component_dims: list
    rranks: list
    integral: IntegralFiber = None
    note: str = ""
    degrees: list = field(default_factory=list)

    @property
    def spec(self):
        return self.complex.spec

    def rrank(self, c, i):
        return self.rranks[c].get(i, 0)


def _int_matrix(m):
    return [[int(x) for x in row] for row in m]


def _integral_cohomology(dims, diffs, i, n):
    """(Z basis, U, U^-1, rank s, torsion) for H^i of an integer complex."""
    nxt = dims.get(i + 1, 0)
    prv = dims.get(i - 1, 0)
    d_out = diffs.get(i)
    if d_out is None or nxt == 0:
        zb = [[int(r == c) for r in range(n)] for c in range(n)]
    else:
        zb = integer_kernel(d_out, n)
    z = len(zb)
    if z == 0:
        return zb, [], [], 0, []
    frame = from_columns(zb, n)
    d_in = diffs.get(i - 1)
    bcols = columns(d_in, n, prv) if (d_in is not None and prv) else []
    bc = []
    for b in bcols:
        c = M.solve(frame, b)
        if c is None:
            raise ComplexError("boundary outside the cycle lattice")
        bc.append([int(x) for x in c])
    if bc:
        U, D, _ = smith_normal_form(from_columns(bc, z))
        diag = [D[j][j] for j in range(min(z, len(bc)))]
    else:
        U, diag = [[int(r == c) for c in range(z)] for r in range(z)], []
    s = sum(1 for t in diag if t)
    torsion = [t for t in diag if t > 1]
    Uinv = _int_matrix(M.inverse(U))
    return zb, U, Uinv, s, torsion


def _integral_fiber(zc, psi):
    dims, diffs = fiber_of(zc, psi)
    data = {i: _integral_cohomology(dims, diffs, i, dims[i]) for i in dims}
    free = {i: len(data[i][0]) - data[i][3] for i in dims}
    torsion = {i: data[i][4] for i in dims}
    beta = {}
    for i in dims:
        if i + 1 not in dims:
            continue
        zb, U, Uinv, s, _ = data[i]
        zb1, U1, _, s1, _ = data[i + 1]
        b = beta0_matrix(zc, i)
        n, n1 = dims[i], dims[i + 1]
        frame1 = from_columns(zb1, n1) if zb1 else None
        cols = []
        for j in range(s, len(zb)):
            coeff = [Uinv[r][j] for r in range(len(zb))]
            lift = [sum(coeff[k] * zb[k][r] for k in range(len(zb))) for r in range(n)]
            img = mat_vec(b, lift, n1)
            if frame1 is None:
                cols.append([])
                continue
            c = M.solve(frame1, img)
            c = [int(x) for x in c]
            uc = [sum(U1[r][k] * c[k] for k in range(len(c))) for r in range(len(c))]
            cols.append(uc[s1:])
        beta[i] = from_columns(cols, free[i + 1]) if cols else [[] for _ in range(free[i + 1])]
    return IntegralFiber(free, torsion, beta)


def fiber_complex(C, x):
    """Cohomology of fib(1 - x*theta): rational dimensions in every component
    and, when 1 - x*theta is integral at the Z-level, free ranks, torsion
    invariants and the beta0 lattice maps."""
    x = Fraction(x)
    dims_per, rr_per = [], []
    for c, (_, k) in enumerate(C.spec.components()):
        lc = C.component(c)
        fd, fdiff = fiber_of(lc, lc.psi(x))
        dims = {i: field_cohomology(fd, fdiff, i).dim for i in fd}
        dims_per.append(dims)
        rr_per.append({i: Fraction(v, k) for i, v in dims.items()})
    lo, hi = min(C.degrees), max(C.degrees) + 1
    integral, note = None, ""
    if x.denominator != 1:
        note = f"x = {x} is not integral; only rational data is available"
    else:
        zc = C.zlevel()
        integral = _integral_fiber(zc, zc.psi(x.numerator))
    for r in rr_per:
        for i, v in r.items():
            r[i] = int(v) if v.denominator == 1 else v
    return FiberData(C, x, dims_per, rr_per, integral, note, list(range(lo, hi + 1)))


def fiber_dimensions_match(fiber, dec):
    """dim H^i(F) = dim H^{i-1}V + dim H^iV in each component."""
    for c, comp in enumerate(dec.components):
        vdim = {i: len(d.V) for i, d in comp.decompositions.items()}
        for i, v in fiber.component_dims[c].items():
            if v != vdim.get(i - 1, 0) + vdim.get(i, 0):
                return False
    return True


# --- Euler characteristic ---------------------------------------------------

@dataclass
class EulerCharClass:
    """chi at Z-level (a positive rational) and its Nrd-shadow in Z(A)."""

    zlevel: Fraction
    shadow: CenterElement
    torsion_orders: dict
    d_alpha: Fraction
    normalization: tuple

    def __post_init__(self):
        if self.zlevel is not None and self.zlevel <= 0:
            raise ValueError("Z-level Euler characteristic must be positive")
        if any(c == 0 for c in self.shadow):
            raise ValueError("Nrd-shadow has a zero component")


def _elementary_product(m, rows, cols):
    if rows == 0 or cols == 0:
        return 1, 0
    _, D, _ = smith_normal_form(m, rows, cols)
    out, r = 1, 0
    for j in range(min(rows, cols)):
        if D[j][j]:
            out *= D[j][j]
            r += 1
    return out, r


def d_alpha(integral):
    """Determinant of the beta0 trivialization in lattice bases:
    prod_i #H^i(H/tors, beta0)^((-1)^i), finite since beta0 is acyclic."""
    degs = sorted(integral.free_ranks)
    ranks, orders = {}, {}
    for i in degs:
        rows = integral.free_ranks.get(i + 1, 0)
        cols = integral.free_ranks[i]
        m = integral.beta0.get(i)
        orders[i], ranks[i] = _elementary_product(m, rows, cols) if m is not None else (1, 0)
    out = Fraction(1)
    for i in degs:
        if integral.free_ranks[i] != ranks.get(i, 0) + ranks.get(i - 1, 0):
            raise SemisimplicityError(f"beta0 is not acyclic in degree {i}")
        h = orders.get(i - 1, 1)
        out *= Fraction(h) if i % 2 == 0 else Fraction(1, h)
    return out


def _shadow(fiber, dec):
    C, x = fiber.complex, fiber.x
    out = []
    for c, comp in enumerate(dec.components):
        _, k = C.spec.components()[c]
        L = C.splitting_field(c)
        val = L.one()
        rrv = Fraction(0)
        for i, d in comp.decompositions.items():
            rrv += (-1) ** (i % 2) * Fraction(len(d.V), k)
            if d.W:
                det = M.det(d.restriction_to_W(comp.psi_on_h[i]))
                val = val * det if i % 2 == 0 else val / det
        if rrv.denominator != 1:
            raise SemisimplicityError(f"component {c}: V has non-integral reduced rank {rrv}")
        val = val * x ** (-int(rrv))
        out.append(descend(C.spec, c, val))
    return CenterElement(out)


def euler_char_class(fiber, dec, normalization=None):
    """Refined Euler characteristic of the fiber with its beta0 trivialization.

    The Z-level class is prod_i #H^i_tors^(eps (-1)^i) * |d(alpha)|^eps'; the
    Nrd-shadow is x^(-rrank V) * prod_i Nrd(psi | W^i)^((-1)^i), i.e. the
    inverse of the predicted special value.
    """
    if not dec.ok:
        raise SemisimplicityError(f"not semisimple at 0 in (component, degree) {dec.failing}")
    eps, eps2 = normalization or NORMALIZATION
    shadow = _shadow(fiber, dec)
    z, tors, da = None, {}, None
    if fiber.integral is not None:
        integ = fiber.integral
        da = d_alpha(integ)
        z = Fraction(1)
        for i in integ.free_ranks:
            t = integ.torsion_order(i)
            tors[i] = t
            z *= Fraction(t) ** (eps * (-1) ** (i % 2))
        z *= abs(da) ** eps2
    return EulerCharClass(z, shadow, tors, da, (eps, eps2))


def burns_value(fiber, dec):
    """|prod_i det(psi | W^i)^((-1)^i)| times x^(-rrank V), Z-coefficients only."""
    return abs(Fraction(_shadow(fiber, dec)[0]))


# --- normalization calibration ---------------------------------------------

def calibration_family(extended=True):
    """diag(1, k) on Z^2, k = 2..10; with ``extended`` also cyclic
    permutations on Z^d, d = 2..6 (all in degree 0, x = 1)."""
    fam = [PerfectComplexEndo([2], theta={0: [[1, 0], [0, k]]}) for k in range(2, 11)]
    if extended:
        for d in range(2, 7):
            P = [[int(r == (c + 1) % d) for c in range(d)] for r in range(d)]
            fam.append(PerfectComplexEndo([d], theta={0: P}))
    return fam


def calibrate_normalization(extended=True):
    """All (eps, eps') for which chi equals the Burns value on the family."""
    data = []
    for C in calibration_family(extended):
        F = fiber_complex(C, 1)
        dec = complex_semisimple_at_zero(C, 1)
        data.append((F, dec, burns_value(F, dec)))
    survivors = []
    for eps in (1, -1):
        for eps2 in (1, -1):
            if all(euler_char_class(F, dec, (eps, eps2)).zlevel == b for F, dec, b in data):
                survivors.append((eps, eps2))
    return survivors
