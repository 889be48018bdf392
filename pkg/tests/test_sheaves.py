from fractions import Fraction

import pytest

from lfunc.coeffalg import AbelianGroupRing, IntegerRing
from lfunc.errors import BranchLocusError, PositiveTwistError, RelationError
from lfunc.exactalg import matrix as M
from lfunc.ffgeom import get_field
from lfunc.ffgeom.variety import ClosedPoint, closed_points_up_to
from lfunc.sheaves import (
    Constant,
    CoverPushforward,
    KummerCover,
    MonodromyAssignment,
    ZeroDimCover,
    artin_model_lattice,
    integral_matrix,
    stalk_frobenius,
    twist_evaluation_point,
)


def test_twist_evaluation_point():
    assert twist_evaluation_point(0, 5) == 1
    assert twist_evaluation_point(-1, 2) == 2
    assert twist_evaluation_point(-2, 3) == 9
    with pytest.raises(PositiveTwistError):
        twist_evaluation_point(1, 2)
    with pytest.raises(PositiveTwistError):
        Constant(twist=1)


def test_constant_stalk():
    x = ClosedPoint(1, (0,), 2, 1)
    m = stalk_frobenius(Constant(rank=2), x)
    assert integral_matrix(m, IntegerRing()) == [[1, 0], [0, 1]]


def test_zero_dim_cover_regular_representation():
    sys = CoverPushforward(ZeroDimCover(1, 2))
    x = ClosedPoint(1, (0,), 3, 1)
    m = stalk_frobenius(sys, x)
    assert integral_matrix(m, sys.spec) == [[0, 1], [1, 0]]


def test_kummer_classes_over_f3():
    cover = KummerCover(get_field(3, 1), 2, "x")
    assert cover.frobenius_class(ClosedPoint(1, (1,), 3, 1)) == 0
    assert cover.frobenius_class(ClosedPoint(1, (2,), 3, 1)) == 1
    assert cover.is_branch(ClosedPoint(1, (0,), 3, 1))


def test_kummer_degree_two_points_by_exponentiation():
    F9 = get_field(3, 2)
    cover = KummerCover(get_field(3, 1), 2, "x")
    base = cover.base_variety()
    for x in closed_points_up_to(base, 2):
        if x.degree != 2:
            continue
        a = x.coords[0]
        # a^((9-1)/2) is +1 (split) or -1 (inert)
        e = F9.pow(a, 4)
        assert cover.frobenius_class(x) == (0 if e == 1 else 1)


def test_branch_locus_error():
    cover = KummerCover(get_field(5, 1), 2, "x^3 - x")
    sys = CoverPushforward(cover)
    with pytest.raises(BranchLocusError):
        stalk_frobenius(sys, ClosedPoint(1, (0,), 5, 1))


def test_kummer_needs_roots_of_unity():
    with pytest.raises(ValueError):
        KummerCover(get_field(2, 1), 3, "x")


def test_monodromy_assignment():
    sys = MonodromyAssignment(IntegerRing(), 2, {"degree:1": [[0, -5], [1, 2]]})
    x = ClosedPoint(1, (0,), 2, 1)
    m = stalk_frobenius(sys, x)
    assert integral_matrix(m, IntegerRing()) == [[0, -5], [1, 2]]
    y = ClosedPoint(2, (2,), 2, 1)
    assert integral_matrix(stalk_frobenius(sys, y), IntegerRing()) == [[1, 0], [0, 1]]


def test_artin_lattice_examples():
    basis, mats = artin_model_lattice([[[1, 0], [0, 1]]], [2])
    assert sorted(map(tuple, basis)) == [(0, 1), (1, 0)]
    basis, mats = artin_model_lattice([[[-1]]], [2])
    assert [list(map(abs, b)) for b in basis] == [[1]]
    basis, mats = artin_model_lattice([[[0, Fraction(1, 2)], [2, 0]]], [2])
    g = mats[0]
    assert all(Fraction(x).denominator == 1 for row in g for x in row)
    assert M.matmul(g, g) == [[1, 0], [0, 1]]


def test_artin_lattice_relation_check():
    with pytest.raises(RelationError):
        artin_model_lattice([[[2]]], [2])


def test_group_of_cover():
    assert CoverPushforward(ZeroDimCover(2, 3)).spec == AbelianGroupRing([3])
