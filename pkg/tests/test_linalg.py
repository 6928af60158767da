from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wreathlab.errors import DimensionMismatch, NoSolution, NotIdempotent
from wreathlab.linalg import (Mat, block_maps, column_basis, hstack, identity, in_span, kernel_basis, kron,
                              permutation, permute_domain, rank, ravel, scalar, solve, split_idempotent,
                              swap, unravel, vector, zeros)

from conftest import matrices, unitriangular


def test_scalars_are_exact():
    assert scalar("6/4") == Fraction(3, 2)
    assert scalar(2) == Fraction(2)
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        scalar(True)


def test_matrices_act_on_columns():
    f = Mat([[1, 2], [3, 4], [5, 6]])
    assert f.shape == (3, 2)
    assert f @ vector([1, 0]) == vector([1, 3, 5])


def test_kron_is_left_factor_major():
    x, y = vector([1, 2]), vector([3, 5, 7])
    assert kron(x, y) == vector([3, 5, 7, 6, 10, 14])
    assert unravel(4, (2, 3)) == (1, 1)
    assert ravel((1, 1), (2, 3)) == 4


def test_swap_flips_factors():
    x, y = vector([1, 2]), vector([3, 5, 7])
    assert swap(2, 3) @ kron(x, y) == kron(y, x)


def test_permutation_moves_factors():
    x, y, z = vector([1, 2]), vector([3, 5, 7]), vector([1, -1])
    P = permutation((2, 3, 2), (2, 0, 1))
    assert P @ kron(x, y, z) == kron(z, x, y)


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        Mat([[1, 2]]) @ Mat([[1, 2]])
    with pytest.raises(DimensionMismatch):
        Mat([[1, 2], [3]])


def test_block_maps():
    inj, proj = block_maps([2, 1])
    assert proj[0] @ inj[0] == identity(2)
    assert (proj[1] @ inj[0]).is_zero()
    assert inj[0] @ proj[0] + inj[1] @ proj[1] == identity(3)


def test_solve_and_no_solution():
    A = Mat([[1, 1], [2, 2]])
    assert A @ solve(A, vector([1, 2])) == vector([1, 2])
    with pytest.raises(NoSolution):
        solve(A, vector([1, 0]))
    assert not in_span(A, vector([1, 0]))


def test_split_rejects_non_idempotent():
    with pytest.raises(NotIdempotent):
        split_idempotent(Mat([[1, 1], [0, 0]]) * 2)


@given(matrices(2, 3), matrices(3, 2), matrices(2, 2), matrices(2, 1))
def test_kron_mixed_product(A, B, C, D):
    assert kron(A, C) @ kron(B, D) == kron(A @ B, C @ D)


@given(matrices(3, 4))
def test_rank_nullity(M):
    assert rank(M) + kernel_basis(M).cols == M.cols
    assert (M @ kernel_basis(M)).is_zero() if kernel_basis(M).cols else True


@given(matrices(3, 3), matrices(3, 2))
def test_solve_finds_preimages(A, X):
    B = A @ X
    assert A @ solve(A, B) == B


@given(matrices(3, 5))
def test_column_basis_spans(M):
    basis, piv = column_basis(M)
    assert basis.cols == rank(M)
    assert rank(hstack([basis, M])) == basis.cols


@given(st.integers(0, 4).flatmap(lambda r: st.tuples(st.just(r), unitriangular(4))))
def test_split_idempotent_contract(data):
    r, S = data
    D = Mat([[1 if i == j and i < r else 0 for j in range(4)] for i in range(4)])
    E = S @ D @ solve(S, identity(4))
    s = split_idempotent(E)
    assert s.rank == r
    assert s.incl @ s.proj == E
    assert s.proj @ s.incl == identity(r)


@given(matrices(2, 12))
def test_permute_domain_matches_permutation(M):
    dims, order = (2, 3, 2), (1, 2, 0)
    assert permute_domain(M, dims, order) == M @ permutation(dims, order)


@given(matrices(3, 3))
def test_json_roundtrip(M):
    assert Mat.from_json(M.to_json()) == M


def test_zero_dimensional_spaces():
    assert zeros(0, 3).shape == (0, 3)
    assert rank(zeros(2, 0)) == 0
