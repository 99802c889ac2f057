import random

import pytest
from hypothesis import given, strategies as st

from skewcenter import validate_and_normalize
from skewcenter.zlinalg import (
    determinant,
    identity,
    image_order,
    is_central,
    kernel_lattice,
    matmul,
    pfaffian,
    pfaffian_adjugate,
    smith_normal_form,
)

from conftest import CY3, SIXTH_ROOT, HYPER, skew_params

small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n)
)


def _check_snf(m):
    s = smith_normal_form(m)
    n = len(m)
    prod = matmul(matmul(s.l, m), s.r)
    assert all(prod[i][j] == (s.d[i] if i == j else 0) for i in range(n) for j in range(n))
    assert abs(determinant(s.l)) == 1 and abs(determinant(s.r)) == 1
    nz = [d for d in s.d if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(s.d, s.d[1:]) if a)
    return s


def test_snf_small_example():
    assert _check_snf([[2, 4], [6, 8]]).d == (2, 4)


def test_snf_identity():
    assert _check_snf(identity(3)).d == (1, 1, 1)


def test_snf_sixth_root_example():
    s = _check_snf(SIXTH_ROOT)
    assert s.d == (1, 1, 3, 3)


@given(small_matrices)
def test_snf_contract(m):
    s = _check_snf(m)
    p = 1
    for d in s.d:
        p *= d
    assert p == abs(determinant(m))


def test_pfaffian_examples():
    assert pfaffian([[0, 7], [-7, 0]]) == 7
    assert pfaffian(CY3) == 0
    assert pfaffian(SIXTH_ROOT) == 3


@given(skew_params(max_n=6, max_ell=20))
def test_pfaffian_squares_to_det(p):
    m = p.skew_matrix()
    assert pfaffian(m) ** 2 == determinant(m)


@given(skew_params(max_n=6, max_ell=20))
def test_adjugate_contract(p):
    m = p.skew_matrix()
    if p.n % 2:
        return
    pf = pfaffian(m)
    adj = pfaffian_adjugate(m)
    scaled = [[pf * (i == j) for j in range(p.n)] for i in range(p.n)]
    assert matmul(adj, m) == scaled and matmul(m, adj) == scaled


def test_adjugate_last_column_shape():
    rng = random.Random(3)
    for _ in range(20):
        m = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                m[i][j] = rng.randint(-9, 9)
                m[j][i] = -m[i][j]
        col = [row[3] for row in pfaffian_adjugate(m)]
        target = [-m[1][2], m[0][2], -m[0][1], 0]
        # proportional: all 2x2 minors vanish
        assert all(col[i] * target[j] == col[j] * target[i] for i in range(4) for j in range(4))


def test_plane_lattice():
    p = validate_and_normalize([[0, 1], [-1, 0]], 4)
    lat = kernel_lattice(p)
    assert lat.index == 16
    cols = lat.columns()
    # a basis of 4Z^2: entries divisible by 4 and covolume 16
    assert all(x % 4 == 0 for c in cols for x in c)
    assert abs(determinant([list(c) for c in cols])) == 16


def test_hypersurface_residues():
    p = validate_and_normalize(HYPER, 5)
    lat = kernel_lattice(p)
    assert lat.index == 25
    assert set(lat.residues) == {(k, k, 0) for k in range(5)}


def test_centrality_examples():
    hyper = validate_and_normalize(HYPER, 5)
    ex = validate_and_normalize(SIXTH_ROOT, 6)
    assert is_central(hyper, (1, 1, 0))
    assert not is_central(ex, (1, 0, 0, 0))
    for p in (hyper, ex):
        for i in range(p.n):
            assert is_central(p, [p.ell * (i == j) for j in range(p.n)])
    assert all(is_central(ex, [x % 6 for x in c]) for c in kernel_lattice(ex).columns())


@pytest.mark.parametrize(
    "b, ell, order",
    [
        ([[0, 1], [-1, 0]], 4, 16),
        ([[0, 1], [-1, 0]], 2, 4),
        ([[0, 4, 6], [-4, 0, 9], [-6, -9, 0]], 24, 576),
        ([[0, 15, 10], [-15, 0, 6], [-10, -6, 0]], 30, 900),
    ],
)
def test_image_order(b, ell, order):
    assert image_order(validate_and_normalize(b, ell)) == order


@given(skew_params())
def test_index_times_residues(p):
    lat = kernel_lattice(p)
    assert lat.index * lat.residue_count() == p.ell**p.n
    assert len(lat.residues) == lat.residue_count()
