from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from wreathlab.algebra import Algebra, cyclic_group_algebra, diagonal_algebra, dual_numbers, ground_field
from wreathlab.linalg import Mat, identity, kron, solve

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(min_value=-3, max_value=3)


def matrices(rows, cols, elements=rationals):
    return st.lists(st.lists(elements, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda e: Mat(e, rows, cols))


@st.composite
def unitriangular(draw, n):
    """Invertible n x n matrices: unit lower triangular times unit upper triangular."""
    L = [[Fraction(1) if i == j else (draw(small_ints) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[Fraction(1) if i == j else (draw(small_ints) if j > i else 0) for j in range(n)] for i in range(n)]
    return Mat(L) @ Mat(U)


def transport(A: Algebra, S: Mat) -> tuple[Algebra, Mat]:
    """The algebra structure on the new basis given by the columns of ``S``; returns it and ``S^-1``."""
    Sinv = solve(S, identity(A.dim))
    return Algebra(Sinv @ A.mult @ kron(S, S), Sinv @ A.unit, A.basis, A.name), Sinv


SMALL_ALGEBRAS = [ground_field, lambda: cyclic_group_algebra(2), lambda: cyclic_group_algebra(3),
                  lambda: diagonal_algebra(2), dual_numbers]


@pytest.fixture(scope="session")
def triangle():
    from wreathlab.gallery.triangle import triangle_fixture
    return triangle_fixture()
