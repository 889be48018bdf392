from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfunc.errors import InsufficientPrecisionError, NoSolutionError, NotInvertibleError
from lfunc.exactalg import (
    QQ,
    NumberField,
    RationalFunction,
    TruncatedSeries,
    cyclotomic_field,
    cyclotomic_polynomial,
    det,
    elementary_divisors,
    hermite_normal_form,
    integer_kernel,
    is_algebraic_integer,
    pade_reconstruct,
    root_of_unity,
    series_inverse,
    smith_normal_form,
)
from lfunc.exactalg import matrix as M
from lfunc.exactalg import poly as P
from lfunc.exactalg.series import series_exp_log_counts

small = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def leibniz(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def test_det_examples():
    assert det([[1, 0], [0, 1]]) == 1
    assert det([[0, -5], [1, 3]]) == 5
    assert det([[0, -3], [1, 7]]) == 3


@settings(max_examples=40, deadline=None)
@given(square(5))
def test_det_matches_leibniz(m):
    assert det(m) == leibniz(m)


@settings(max_examples=40, deadline=None)
@given(square(3), square(3))
def test_det_multiplicative(a, b):
    assert det(M.matmul(a, b)) == det(a) * det(b)


def test_det_rational_entries():
    assert det([[Fraction(1, 2), 1], [1, 2]]) == 0
    assert det([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


def test_smith_examples():
    U, D, V = smith_normal_form([[2, 0], [0, 3]])
    assert D == [[1, 0], [0, 6]]
    U, D, V = smith_normal_form([[0, 0, 0], [0, 0, 0]])
    assert D == [[0, 0, 0], [0, 0, 0]]
    assert U == [[1, 0], [0, 1]]
    assert V == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=6, max_size=6), min_size=4, max_size=4))
def test_smith_multiply_back(m):
    U, D, V = smith_normal_form(m)
    assert M.matmul(M.matmul(U, m), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(4)]
    assert all(D[i][j] == 0 for i in range(4) for j in range(6) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert diag[len(nz):] == [0] * (4 - len(nz))


def test_elementary_divisors():
    assert elementary_divisors([[2, 4], [6, 8]]) == [2, 4]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=3, max_size=3))
def test_hnf_and_kernel(m):
    H, U = hermite_normal_form(m)
    assert M.matmul(U, m) == H
    assert abs(det(U)) == 1
    for v in integer_kernel(m):
        assert all(x == 0 for x in M.matvec(m, v))
    assert len(integer_kernel(m)) == 4 - M.rank(m)


def test_number_fields():
    K = NumberField([-1, -1, 1])  # x^2 - x - 1
    phi = K.gen()
    assert is_algebraic_integer(phi)
    assert not is_algebraic_integer(Fraction(1, 2))
    z3 = root_of_unity(3)
    assert is_algebraic_integer(z3)
    assert z3.minpoly() == (1, 1, 1)
    assert (1 + z3).minpoly() == (1, -1, 1)
    assert z3**3 == z3.field.one()
    assert phi * phi == phi + 1
    assert (1 / phi) * phi == K.one()


def test_number_field_rejects_reducible():
    with pytest.raises(Exception):
        NumberField([-1, 0, 1])


def test_cyclotomic():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_field(2) is QQ or cyclotomic_field(2).degree == 1
    K = cyclotomic_field(5)
    z = root_of_unity(5, K)
    assert z.norm() == 1
    assert (1 - z).norm() == 5


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=4), st.lists(small, min_size=1, max_size=4))
def test_poly_divmod(a, b):
    a, b = P.trim([Fraction(x) for x in a]), P.trim([Fraction(x) for x in b])
    if not b:
        return
    q, r = P.divmod_poly(a, b)
    assert P.add(P.mul(q, b), r) == a
    assert P.degree(r) < P.degree(b)


def test_series_inverse_examples():
    s = series_inverse(TruncatedSeries([1, -1], 4))
    assert list(s.coefficients) == [1, 1, 1, 1, 1]
    assert list(series_inverse(TruncatedSeries([2], 0)).coefficients) == [Fraction(1, 2)]
    with pytest.raises(NotInvertibleError):
        series_inverse(TruncatedSeries([0, 1], 3))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).filter(bool), st.lists(small, min_size=5, max_size=5))
def test_series_inverse_multiply_back(c0, rest):
    s = TruncatedSeries([c0] + rest, 5)
    prod = s * series_inverse(s)
    assert list(prod.coefficients) == [1, 0, 0, 0, 0, 0]


def test_series_precision_is_min():
    a = TruncatedSeries([1, 2, 3], 2)
    b = TruncatedSeries([1, 1, 1, 1, 1], 4)
    assert (a * b).precision == 2
    assert (a + b).precision == 2


def test_exp_log_counts_projective_line():
    s = series_exp_log_counts([2**d + 1 for d in range(1, 7)], 6)
    assert list(s.coefficients) == [1, 3, 7, 15, 31, 63, 127]


def test_pade_examples():
    f = pade_reconstruct(TruncatedSeries([1, 2, 4, 8, 16]), 0, 1, 2)
    assert f == RationalFunction((1,), (1, -2))
    f = pade_reconstruct(TruncatedSeries([1, 3, 7, 15, 31, 63, 127]), 0, 2, 2)
    assert f == RationalFunction((1,), (1, -3, 2))
    with pytest.raises(InsufficientPrecisionError):
        pade_reconstruct(TruncatedSeries([1, 1]), 0, 2, 2)


def test_pade_corrupted_series():
    with pytest.raises(NoSolutionError):
        pade_reconstruct(TruncatedSeries([1, 3, 7, 15, 31, 64, 127]), 0, 2, 2)


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), st.lists(small, min_size=1, max_size=3))
def test_pade_round_trip(num, den_tail):
    den = [1] + den_tail
    f = RationalFunction([Fraction(x) for x in num], [Fraction(x) for x in den])
    m, n = len(num) - 1, len(den) - 1
    s = f.expand(m + n + 4)
    assert pade_reconstruct(s, m, n, 3) == f


def test_rational_function_normalization():
    f = RationalFunction((2, -2), (2, -4, 2))
    assert f.denominator == (1, -1)
    assert f.numerator == (1,)
    assert f.evaluate(Fraction(1, 2)) == 2
