"""Semisimplicity at 0 of endomorphisms and of complexes."""

from dataclasses import dataclass, field

from ..exactalg import matrix as M
from .complexes import (
    beta0_matrix,
    fiber_of,
    field_cohomology,
    from_columns,
    induced_map,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank_of,
)


@dataclass
class SemisimpleDecomposition:
    """V = ker(psi), W = im(psi) when rank(psi) = rank(psi^2)."""

    ok: bool
    n: int
    rank: int
    rank_sq: int
    V: list = field(default_factory=list)
    W: list = field(default_factory=list)
    witness: list = None

    def restriction_to_W(self, psi):
        """Matrix of psi on W in the basis ``W``."""
        if not self.W:
            return []
        frame = from_columns(self.W, self.n)
        cols = []
        for w in self.W:
            c = M.solve(frame, mat_vec(psi, w, self.n))
            cols.append(c)
        return from_columns(cols, len(self.W))


def semisimple_at_zero(psi, n=None):
    """Split ``psi`` (square, over a field) as 0 on V plus invertible on W.

    The failure verdict carries a witness v with psi^2 v = 0 and psi v != 0.
    """
    n = len(psi) if n is None else n
    r1 = rank_of(psi, n, n)
    psi2 = mat_mul(psi, psi, n, n, n)
    r2 = rank_of(psi2, n, n)
    if r1 != r2:
        ker2 = kernel_basis(psi2, n, n)
        witness = next(v for v in ker2 if any(x != 0 for x in mat_vec(psi, v, n)))
        return SemisimpleDecomposition(False, n, r1, r2, witness=witness)
    V = kernel_basis(psi, n, n)
    W = [list(w) for w in M.column_space(psi)] if r1 else []
    return SemisimpleDecomposition(True, n, r1, r2, V, W)


@dataclass
class ComponentSemisimplicity:
    """Per-degree verdicts on H^i(psi) for one Wedderburn component."""

    degrees: list
    cohomology: dict
    psi_on_h: dict
    decompositions: dict
    beta0_acyclic: bool
    beta0_ranks: dict
    fiber_dims: dict

    @property
    def ok(self):
        return all(d.ok for d in self.decompositions.values())

    @property
    def failing_degrees(self):
        return [i for i, d in self.decompositions.items() if not d.ok]


@dataclass
class ComplexSemisimplicity:
    x: object
    components: list

    @property
    def ok(self):
        return all(c.ok for c in self.components)

    @property
    def beta0_acyclic(self):
        return all(c.beta0_acyclic for c in self.components)

    @property
    def consistent(self):
        """Per-degree verdicts agree with beta0-acyclicity in every component."""
        return all(c.ok == c.beta0_acyclic for c in self.components)

    @property
    def failing(self):
        return [(c, i) for c, comp in enumerate(self.components) for i in comp.failing_degrees]


def _component_verdict(lc, psi):
    degrees = lc.degrees
    coh = {i: lc.cohomology(i) for i in degrees}
    psi_h, decs = {}, {}
    for i in degrees:
        h = coh[i]
        psi_h[i] = induced_map(h, h, psi[i], lc.dims[i])
        decs[i] = semisimple_at_zero(psi_h[i], h.dim)
    fdims, fdiffs = fiber_of(lc, psi)
    fcoh = {i: field_cohomology(fdims, fdiffs, i) for i in fdims}
    franks = {}
    for i in fdims:
        if i + 1 in fdims:
            b = beta0_matrix(lc, i)
            franks[i] = rank_of(induced_map(fcoh[i], fcoh[i + 1], b, fdims[i + 1]), fcoh[i + 1].dim, fcoh[i].dim)
        else:
            franks[i] = 0
    acyclic = all(fcoh[i].dim == franks[i] + franks.get(i - 1, 0) for i in fdims)
    return ComponentSemisimplicity(
        degrees, coh, psi_h, decs, acyclic, franks, {i: fcoh[i].dim for i in fdims}
    )


def complex_semisimple_at_zero(C, x=1, psi=None):
    """Semisimplicity at 0 of H^i(1 - x*theta) in each component, plus the
    acyclicity of the beta0-complex on the cohomology of the fiber.

    ``psi`` may be given instead as a per-degree dict of matrices over the
    order; it must be a chain endomorphism.
    """
    comps = []
    for c in range(len(C.spec.components())):
        lc = C.component(c)
        if psi is None:
            p = lc.psi(x)
        else:
            p = {i: C._image(psi[i], C.rank(i), C.rank(i), c) for i in C.degrees}
        comps.append(_component_verdict(lc, p))
    return ComplexSemisimplicity(x, comps)
