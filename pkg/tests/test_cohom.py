from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_complex, random_degree0, rng_for
from lfunc.coeffalg import AbelianGroupRing, CenterElement
from lfunc.cohom import (
    NORMALIZATION,
    PerfectComplexEndo,
    burns_value,
    charfrac,
    complex_semisimple_at_zero,
    euler_char_class,
    expected_orders,
    fiber_complex,
    fiber_dimensions_match,
    semisimple_at_zero,
    verify_special_value_theorem,
    weil_etale_zero_dim,
)
from lfunc.errors import ComplexError, PositiveTwistError, SemisimplicityError
from lfunc.exactalg import RationalFunction
from lfunc.exactalg import matrix as M
from lfunc.lseries import special_value


def rf(num, den):
    return RationalFunction(tuple(num), tuple(den))


# --- charfrac ----------------------------------------------------------------

def test_charfrac_examples():
    C = PerfectComplexEndo([2], theta={0: [[1, 0], [0, 2]]})
    assert charfrac(C) == [rf([1], [1, -3, 2])]
    C1 = PerfectComplexEndo({1: 2}, theta={1: [[1, 0], [0, 2]]})
    assert charfrac(C1) == [rf([1, -3, 2], [1])]
    G = AbelianGroupRing([2])
    sigma = G.group_element(1)
    C2 = PerfectComplexEndo([1], theta={0: [[sigma]]}, spec=G)
    assert charfrac(C2) == [rf([1], [1, -1]), rf([1], [1, 1])]


def test_bad_complex_rejected():
    # d^2 != 0
    with pytest.raises(ComplexError):
        PerfectComplexEndo([1, 1, 1], {0: [[1]], 1: [[1]]}, {0: [[1]], 1: [[1]], 2: [[1]]})
    # theta does not commute with d
    with pytest.raises(ComplexError):
        PerfectComplexEndo([1, 1], {0: [[1]]}, {0: [[1]], 1: [[2]]})


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_shift_antisymmetry(seed):
    C = random_complex(rng_for(seed))
    f, = charfrac(C)
    g, = charfrac(C.shift(1))
    assert f * g == rf([1], [1])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_direct_sum_multiplicative(s1, s2):
    A, B = random_complex(rng_for(s1)), random_complex(rng_for(s2))
    assert charfrac(A.direct_sum(B)) == [charfrac(A)[0] * charfrac(B)[0]]


# --- semisimplicity ----------------------------------------------------------

def test_semisimple_examples():
    d = semisimple_at_zero([[0, 0], [0, 0]])
    assert d.ok and len(d.V) == 2 and not d.W
    d = semisimple_at_zero([[0, 1], [0, 0]])
    assert not d.ok
    assert d.rank == 1 and d.rank_sq == 0
    assert d.witness is not None
    d = semisimple_at_zero([[0, 0], [0, -1]])
    assert d.ok
    assert [list(v) for v in d.V] == [[1, 0]]
    assert len(d.W) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_semisimple_iff_rank_condition(m):
    d = semisimple_at_zero(m)
    assert d.ok == (M.rank(m) == M.rank(M.matmul(m, m)))
    if d.ok and d.W:
        assert M.det(d.restriction_to_W(m)) != 0


def test_complex_semisimple_examples():
    C = PerfectComplexEndo([2], theta={0: [[1, 0], [0, 3]]})
    dec = complex_semisimple_at_zero(C, 1)
    assert dec.ok and dec.beta0_acyclic
    # H^0 = Q with theta = 1, H^2 = Q with theta = 3
    P = PerfectComplexEndo({0: 1, 1: 0, 2: 1}, theta={0: [[1]], 2: [[3]]})
    dec = complex_semisimple_at_zero(P, 1)
    assert dec.ok and dec.beta0_acyclic
    # Jordan block in degree 0, padded by an acyclic pair in degrees 1, 2
    J = PerfectComplexEndo(
        {0: 2, 1: 1, 2: 1},
        {1: [[1]]},
        {0: [[1, 1], [0, 1]], 1: [[2]], 2: [[2]]},
    )
    dec = complex_semisimple_at_zero(J, 1)
    assert not dec.ok
    assert not dec.beta0_acyclic
    assert dec.consistent


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2, 3]))
def test_semisimplicity_equivalence(seed, x):
    C = random_complex(rng_for(seed))
    dec = complex_semisimple_at_zero(C, x)
    assert dec.ok == dec.beta0_acyclic


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2, 3]))
def test_fiber_dimensions(seed, x):
    C = random_complex(rng_for(seed))
    dec = complex_semisimple_at_zero(C, x)
    if dec.ok:
        assert fiber_dimensions_match(fiber_complex(C, x), dec)


# --- fiber and Euler characteristic -----------------------------------------

def test_fiber_examples():
    F = fiber_complex(PerfectComplexEndo([1], theta={0: [[1]]}), 1)
    assert F.integral.free_ranks == {0: 1, 1: 1}
    assert all(not t for t in F.integral.torsion.values())
    F = fiber_complex(PerfectComplexEndo([2], theta={0: [[1, 0], [0, 3]]}), 1)
    assert F.integral.free_ranks == {0: 1, 1: 1}
    assert F.integral.torsion.get(1) == [2]
    for d in range(2, 6):
        P = [[int(r == (c + 1) % d) for c in range(d)] for r in range(d)]
        F = fiber_complex(PerfectComplexEndo([d], theta={0: P}), 1)
        assert F.integral.free_ranks == {0: 1, 1: 1}


def test_fiber_non_integral_point():
    F = fiber_complex(PerfectComplexEndo([1], theta={0: [[2]]}), Fraction(1, 2))
    assert F.integral is None and F.note


def test_euler_char_examples():
    def chi(C, x=1):
        return euler_char_class(fiber_complex(C, x), complex_semisimple_at_zero(C, x))

    assert chi(PerfectComplexEndo([2], theta={0: [[1, 0], [0, 3]]})).zlevel == 2
    for d in range(2, 6):
        P = [[int(r == (c + 1) % d) for c in range(d)] for r in range(d)]
        assert chi(PerfectComplexEndo([d], theta={0: P})).zlevel == d
    assert chi(PerfectComplexEndo([1], theta={0: [[1]]})).zlevel == 1


def test_euler_char_requires_semisimplicity():
    C = PerfectComplexEndo([2], theta={0: [[1, 1], [0, 1]]})
    with pytest.raises(SemisimplicityError):
        euler_char_class(fiber_complex(C, 1), complex_semisimple_at_zero(C, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_burns_identity_degree_zero(seed):
    rng = rng_for(seed)
    data = random_degree0(rng)
    if data is None:
        return
    ranks, _, theta = data
    lo = next(iter(ranks))
    if lo != 0:
        return
    C = PerfectComplexEndo(ranks, theta={0: theta[0]})
    dec = complex_semisimple_at_zero(C, 1)
    if not dec.ok:
        return
    F = fiber_complex(C, 1)
    assert euler_char_class(F, dec).zlevel == burns_value(F, dec)


def test_normalization_is_frozen():
    assert NORMALIZATION == (-1, -1)


# --- zero-dimensional Weil-etale data ----------------------------------------

def test_zero_dim_examples():
    W = weil_etale_zero_dim(1)
    F = W.fiber()
    assert F.integral.free_ranks == {0: 1, 1: 1}
    assert euler_char_class(F, W.semisimplicity()).zlevel == 1
    W = weil_etale_zero_dim(3)
    assert euler_char_class(W.fiber(), W.semisimplicity()).zlevel == 3
    for q in (2, 3, 5):
        W = weil_etale_zero_dim(1, n=-1, q=q)
        F = W.fiber()
        assert F.integral.free_ranks.get(0, 0) == 0
        assert F.integral.torsion.get(1) == ([q - 1] if q > 2 else [])
        assert euler_char_class(F, W.semisimplicity()).zlevel == q - 1


def test_positive_twist_rejected():
    with pytest.raises(PositiveTwistError):
        weil_etale_zero_dim(1, n=1)


# --- verifier ---------------------------------------------------------------

def test_verify_examples():
    W = weil_etale_zero_dim(3)
    F, dec = W.fiber(), W.semisimplicity()
    lres = special_value([rf([1], [1, 0, 0, -1])], 1)
    v = verify_special_value_theorem(lres, F, dec)
    assert v.passed and v.orders == (-1,) and tuple(expected_orders(F)) == (-1,)

    C = PerfectComplexEndo([2], theta={0: [[1, 0], [0, 3]]})
    F, dec = fiber_complex(C, 1), complex_semisimple_at_zero(C, 1)
    lres = special_value(charfrac(C), 1)
    assert lres.values[0] == Fraction(-1, 2)
    v = verify_special_value_theorem(lres, F, dec)
    assert v.passed


def test_verify_zero_dim_cover_componentwise():
    G = AbelianGroupRing([2])
    W = weil_etale_zero_dim(1, Phi=G.group_element(1), spec=G)
    lres = special_value([rf([1], [1, -1]), rf([1], [1, 1])], 1)
    v = verify_special_value_theorem(lres, W.fiber(), W.semisimplicity(), spec=G)
    assert v.passed and v.orders == (-1, 0)
    assert v.caveat


def test_verify_detects_wrong_value():
    W = weil_etale_zero_dim(3)
    lres = special_value([rf([1], [1, 0, 0, -1])], 1)
    v = verify_special_value_theorem(lres, W.fiber(), W.semisimplicity(), chi=CenterElement([Fraction(5)]))
    assert not v.value_ok and not v.passed
    wrong = special_value([rf([1], [1, -1])], 1)
    v = verify_special_value_theorem(wrong, W.fiber(), W.semisimplicity())
    assert not v.passed
