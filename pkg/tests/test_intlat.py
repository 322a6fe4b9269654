from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nccrkit.intlat import (
    IntMatrix, cokernel, hnf, inverse_unimodular, kernel_basis, primitive, rational_inverse,
    row_lattice_basis, snf, solve_rational, xgcd,
)
from oracles import invariant_factors_by_minors

SIGMA_PAIRING = [[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]


def matrices(max_dim=4, bound=9):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                               min_size=m, max_size=m)))


def test_hnf_small_example():
    A = IntMatrix([[2, 4], [6, 8]])
    H, U = hnf(A)
    assert U @ A == H
    assert abs(U.det()) == 1
    assert H.tolist() == [[2, 0], [0, 4]]


def test_snf_small_example():
    dec = snf([[2, 4], [6, 8]])
    assert dec.invariant_factors == (2, 4)
    assert dec.U @ IntMatrix([[2, 4], [6, 8]]) @ dec.V == dec.D


def test_snf_sigma_pairing():
    # gcd of entries 1, of 2x2 minors 2, of 3x3 minors 4
    assert snf(SIGMA_PAIRING).invariant_factors == (1, 2, 2)
    assert invariant_factors_by_minors(SIGMA_PAIRING) == (1, 2, 2)


def test_snf_zero_and_empty_rank():
    assert snf([[0, 0], [0, 0]]).invariant_factors == ()
    assert snf([[0, 3]]).invariant_factors == (3,)


def test_kernel_basis_row():
    K = kernel_basis([[2, 4]])
    assert K.shape == (2, 1)
    v = K.column(0)
    assert v in ((2, -1), (-2, 1))


def test_kernel_basis_full_rank_is_empty():
    assert kernel_basis([[1, 0], [0, 1]]).cols == 0


def test_cokernel_sigma():
    G, images = cokernel(SIGMA_PAIRING)
    assert (G.free_rank, G.torsion) == (1, (2, 2))
    assert len(images) == 4


def test_row_lattice_basis_canonical():
    a = row_lattice_basis([[2, 0], [0, 3], [2, 3]], 2)
    b = row_lattice_basis([[0, 3], [2, 3]], 2)
    assert a == b and abs(a.det()) == 6


def test_rational_tools():
    assert rational_inverse([[2, 0], [0, 4]]) == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]
    assert solve_rational([[1, 0], [2, 3]], [1, 1]) == (1, Fraction(-1, 3))
    assert solve_rational([[1, 1], [1, 1]], [0, 1]) is None
    with pytest.raises(ValueError):
        rational_inverse([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        inverse_unimodular([[2, 0], [0, 1]])


def test_primitive_and_xgcd():
    assert primitive((4, -6, 2)) == (2, -3, 1)
    with pytest.raises(ValueError):
        primitive((0, 0))
    g, x, y = xgcd(14, 5)
    assert g == 1 and 14 * x + 5 * y == 1


def test_ragged_matrix_rejected():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])


@given(matrices())
def test_hnf_properties(rows):
    A = IntMatrix(rows)
    H, U = hnf(A)
    assert U @ A == H
    assert abs(U.det()) == 1
    # pivots strictly move right and entries above a pivot are reduced
    last = -1
    for i in range(H.rows):
        r = H.row(i)
        if not any(r):
            assert all(not any(H.row(k)) for k in range(i, H.rows))
            break
        p = next(j for j, x in enumerate(r) if x)
        assert p > last and r[p] > 0
        for k in range(i):
            assert 0 <= H[k, p] < r[p]
        last = p


@given(matrices(max_dim=3, bound=6))
def test_kernel_basis_spans_kernel(rows):
    A = IntMatrix(rows)
    K = kernel_basis(A)
    assert K.cols == A.cols - A.rank()
    for j in range(K.cols):
        assert not any(A.apply(K.column(j)))
    if K.cols:
        # saturated: the basis extends to a basis of Z^n, so its maximal minors are coprime
        assert snf(K).invariant_factors == (1,) * K.cols
