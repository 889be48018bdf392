"""Weil-etale complexes of Spec F_{q^d} over F_q."""

from dataclasses import dataclass
from fractions import Fraction

from ..coeffalg import IntegerRing
from ..errors import PositiveTwistError
from ..sheaves import twist_evaluation_point
from .complexes import PerfectComplexEndo
from .fiber import fiber_complex
from .semisimple import complex_semisimple_at_zero


@dataclass
class ZeroDimWeilEtale:
    """M^d in degree 0 with phi = cyclic shift, Phi on the wrap-around slot;
    the comparison at twist n uses 1 - x*phi with x = q^-n."""

    complex: PerfectComplexEndo
    x: Fraction
    n: int
    q: int
    d: int

    def fiber(self):
        return fiber_complex(self.complex, self.x)

    def semisimplicity(self):
        return complex_semisimple_at_zero(self.complex, self.x)


def _as_matrix(Phi, spec):
    if isinstance(Phi, (int, Fraction)):
        return [[Phi]]
    if Phi and not isinstance(Phi[0], (list, tuple)):
        # a single order element given by coordinates
        return [[tuple(Phi)]]
    if Phi and Phi[0] and isinstance(Phi[0][0], (int, Fraction)) and not isinstance(spec, IntegerRing):
        if len(Phi) == 1 and len(Phi[0]) == spec.dim:
            return [[tuple(Phi[0])]]
    return [list(r) for r in Phi]


def weil_etale_zero_dim(d, Phi=1, n=0, q=2, spec=None):
    """Build the degree-0 complex M^d with its Frobenius for X = Spec F_{q^d}.

    ``Phi`` is the r x r matrix over the order by which the degree-d
    Frobenius acts on M = R^r (an int or an order element means r = 1).
    """
    if n > 0:
        raise PositiveTwistError(f"twist {n} > 0 is not supported")
    if d < 1:
        raise ValueError("degree must be positive")
    spec = spec if spec is not None else IntegerRing()
    m = _as_matrix(Phi, spec)
    r = len(m)
    zero = 0 if isinstance(spec, IntegerRing) else spec.zero()
    one = 1 if isinstance(spec, IntegerRing) else spec.one()
    size = d * r
    phi = [[zero] * size for _ in range(size)]
    for j in range(d - 1):
        for t in range(r):
            phi[(j + 1) * r + t][j * r + t] = one
    for a in range(r):
        for b in range(r):
            phi[a][(d - 1) * r + b] = m[a][b]
    C = PerfectComplexEndo({0: size}, {}, {0: phi}, spec)
    return ZeroDimWeilEtale(C, twist_evaluation_point(n, q), n, q, d)
