import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfunc.errors import CacheCorruptionError, ResourceLimitError
from lfunc.ffgeom import (
    FiniteField,
    PointCountCache,
    Variety,
    affine_space,
    closed_point_counts,
    closed_points_up_to,
    count_points,
    embedding,
    frobenius,
    get_field,
    projective_space,
    rational_points,
    spec_extension,
)
from lfunc.ffgeom.field import count_roots, find_roots, is_irreducible_mod_p, smallest_irreducible

FIELDS = [(2, 1), (2, 3), (3, 2), (5, 1), (7, 2)]


@pytest.mark.parametrize("p,k", FIELDS)
def test_modulus_irreducible(p, k):
    F = get_field(p, k)
    assert is_irreducible_mod_p(list(F.modulus), p)
    assert len(list(F.elements())) == p**k


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pk, data):
    F = get_field(*pk)
    el = st.integers(0, F.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.pow(a, F.order) == a


def test_frobenius_examples():
    F4 = get_field(2, 2)
    g = F4.gen
    assert frobenius(g, F4, 2) == F4.mul(g, g)
    F9 = get_field(3, 2)
    for e in range(3):
        assert frobenius(e, F9, 3) == e


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3**4 - 1))
def test_frobenius_orbit_closes(e):
    F = get_field(3, 4)
    d = F.element_degree(e, 3)
    cur = e
    for i in range(d):
        cur = frobenius(cur, F, 3)
        if i < d - 1:
            assert cur != e
    assert cur == e


def test_embedding_is_a_homomorphism():
    small, big = get_field(2, 2), get_field(2, 4)
    emb = embedding(small, big)
    for a in range(4):
        for b in range(4):
            assert emb[small.mul(a, b)] == big.mul(emb[a], emb[b])
            assert emb[small.add(a, b)] == big.add(emb[a], emb[b])


def test_root_finding():
    F = get_field(5, 1)
    # x^2 - 1 has roots 1, 4
    assert sorted(find_roots(F, [4, 0, 1])) == [1, 4]
    assert count_roots(F, [2, 0, 1]) == 0  # x^2 + 2 has no root mod 5
    F8 = get_field(2, 3)
    assert count_roots(F8, [0, 1, 0, 0, 0, 0, 0, 0, 1]) == 8  # x^8 + x


def test_point_counts_examples():
    F2, F3 = get_field(2, 1), get_field(3, 1)
    assert count_points(projective_space(F2, 1), 3) == 9
    assert count_points(affine_space(F3, 1), 2) == 9
    assert count_points(projective_space(F3, 2), 1) == 13


def _f25():
    # independent model of F_25 as F_5[i]/(i^2 - 2)
    els = [(a, b) for a in range(5) for b in range(5)]

    def add(x, y):
        return ((x[0] + y[0]) % 5, (x[1] + y[1]) % 5)

    def mul(x, y):
        return ((x[0] * y[0] + 2 * x[1] * y[1]) % 5, (x[0] * y[1] + x[1] * y[0]) % 5)

    return els, add, mul


def brute_elliptic(d):
    """Projective points of y^2 z = x^3 + x z^2 + z^3 over F_5 or F_25."""
    if d == 1:
        els = [(a, 0) for a in range(5)]
    else:
        els = _f25()[0]
    _, add, mul = _f25()

    def f(x, y, z):
        lhs = mul(mul(y, y), z)
        rhs = add(add(mul(mul(x, x), x), mul(x, mul(z, z))), mul(mul(z, z), z))
        return lhs == rhs

    pts = set()
    zero, one = (0, 0), (1, 0)
    for x in els:
        for y in els:
            if f(x, y, one):
                pts.add((x, y, one))
    for x in els:
        if f(x, one, zero):
            pts.add((x, one, zero))
    if f(one, zero, zero):
        pts.add((one, zero, zero))
    return len(pts)


ELLIPTIC = "y^2*z - x^3 - x*z^2 - z^3"


def test_elliptic_curve_counts_against_independent_enumeration():
    E = Variety(get_field(5, 1), "projective", 2, [ELLIPTIC], variables=["x", "y", "z"])
    for d in (1, 2):
        n = brute_elliptic(d)
        assert count_points(E, d) == n
        assert count_points(E, d, method="exhaustive") == n


def test_closed_points_examples():
    F2 = get_field(2, 1)
    pts = closed_points_up_to(projective_space(F2, 1), 2)
    assert sorted(x.degree for x in pts) == [1, 1, 1, 2]
    pts = closed_points_up_to(affine_space(F2, 1), 3)
    assert sorted(x.degree for x in pts) == [1, 1, 2, 3, 3]
    for d in (1, 2, 3):
        pts = closed_points_up_to(spec_extension(get_field(3, 1), d), 4)
        assert [x.degree for x in pts] == [d]


def test_closed_point_representatives_have_exact_degree():
    v = affine_space(get_field(3, 1), 1)
    for x in closed_points_up_to(v, 3):
        orbit = x.orbit()
        assert len(set(orbit)) == x.degree
        nxt = tuple(frobenius(c, x.field, x.q) for c in orbit[-1])
        assert nxt == x.coords


def test_closed_point_counts_moebius():
    assert closed_point_counts([3, 5, 9]) == [3, 1, 2]


def test_exclusion_and_budget():
    F3 = get_field(3, 1)
    v = Variety(F3, "affine", 1, [], exclude=["x*(x-1)"], variables=["x"])
    assert count_points(v, 1) == 1
    with pytest.raises(ResourceLimitError):
        count_points(affine_space(F3, 3), 2, budget=100, method="exhaustive")
    assert len(list(rational_points(v, 1))) == 1


def test_projective_requires_homogeneous():
    with pytest.raises(ValueError):
        Variety(get_field(2, 1), "projective", 1, ["x0^2 + x1"])


def test_cache_round_trip(tmp_path):
    path = tmp_path / "counts.txt"
    v = projective_space(get_field(2, 1), 1)
    cache = PointCountCache(str(path))
    assert count_points(v, 4, cache=cache) == 17
    again = PointCountCache(str(path))
    assert again.get(v.content_hash(), 4) == 17
    assert count_points(v, 4, cache=again) == 17


def test_cache_corruption(tmp_path):
    path = tmp_path / "counts.txt"
    path.write_text("abc 1 3\nabc 1 4\n")
    with pytest.raises(CacheCorruptionError):
        PointCountCache(str(path))
    path.write_text("abc one 3\n")
    with pytest.raises(CacheCorruptionError):
        PointCountCache(str(path))


def test_smallest_irreducible_is_minimal():
    m = smallest_irreducible(2, 4)
    assert is_irreducible_mod_p(list(m), 2)
    assert FiniteField(2, 4).modulus == m
