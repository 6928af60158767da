from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wreathlab.algebra import cyclic_group_algebra, diagonal_algebra, ground_field
from wreathlab.errors import DimensionMismatch
from wreathlab.linalg import vector, zeros
from wreathlab.ore import (OrePoly, PQQuasiDerivation, broken_delta_pqqd, classical_pqqd, is_classical,
                           ore_check_properties, ore_psi, ore_psibar, ore_strictness_diagrams, ore_tilde_basis,
                           ore_tilde_report, ore_unit, ore_wreath_mult, ore_wreath_report, psi_table,
                           triangular_pqqd, validate_pqqd)

from conftest import rationals

E11, E12, E22 = vector([1, 0, 0]), vector([0, 1, 0]), vector([0, 0, 1])


@pytest.fixture(scope="module")
def tri():
    return triangular_pqqd()


def mono(b, n):
    return OrePoly.monomial(b, n, 3)


def B_mul(d, x, y):
    return d.B.mul(x, y)


def poly(*coeffs, dim=3):
    return OrePoly(dim, tuple(tuple(c) for c in coeffs))


def test_triangular_pqqd_is_valid(tri):
    assert validate_pqqd(tri).ok
    assert not is_classical(tri)


def test_classical_cases_are_valid():
    for B in (ground_field(), cyclic_group_algebra(2), diagonal_algebra(2)):
        d = classical_pqqd(B)
        assert is_classical(d)
        assert validate_pqqd(d).ok


def test_q_equal_p_fails_square_zero(tri):
    d = PQQuasiDerivation(tri.B, tri.p, E11, tri.sigma, tri.delta)
    rep = validate_pqqd(d)
    assert not rep["q square zero"].passed
    assert rep["q square zero"].replay()
    assert all(c.replay() for c in rep.failures())


def test_shape_errors(tri):
    with pytest.raises(DimensionMismatch):
        PQQuasiDerivation(tri.B, vector([1, 0]), tri.q, tri.sigma, tri.delta)


# -- the three clauses -------------------------------------------------------------------


@pytest.mark.parametrize("i", range(3))
def test_first_clause(tri, i):
    b = tri.B.e(i)
    expected = poly(B_mul(tri, b, tri.p).column(0), B_mul(tri, b, tri.q).column(0))
    assert ore_psi(tri, 0, b) == expected


@pytest.mark.parametrize("i", range(3))
def test_second_clause(tri, i):
    d, b = tri, tri.B.e(i)
    s, t = d.sigma @ b, d.delta @ b
    expected = poly(B_mul(d, t, d.p).column(0),
                    (s + B_mul(d, t, d.q)).column(0),
                    B_mul(d, s, d.q).column(0))
    assert ore_psi(d, 1, b) == expected


def test_hand_values(tri):
    # psi(X^n (x) E11) = E11 X^n + E12 X^{n+1}; the other basis elements go to 0 for n >= 1
    for n in range(1, 7):
        assert ore_psi(tri, n, E11) == mono(E11, n) + mono(E12, n + 1)
        assert ore_psi(tri, n, E12) == poly()
        assert ore_psi(tri, n, E22) == poly()
    assert ore_psi(tri, 0, E22) == poly()
    assert ore_psi(tri, 0, E12) == poly()


def test_third_clause_once(tri):
    d = tri
    one = d.B.unit
    lhs = ore_psi(d, 2, one)
    shifted = ore_psi(d, 1, d.sigma @ one)
    rhs = OrePoly(3, ((0, 0, 0),) + shifted.coeffs) + ore_psi(d, 1, d.delta @ one)
    assert lhs == rhs


def test_psi_table_shape(tri):
    for n in range(5):
        assert psi_table(tri, n).shape == (n + 2, 3, 3)


@given(st.integers(min_value=0, max_value=6), st.lists(rationals, min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3), rationals)
def test_psi_is_linear(n, x, y, c):
    d = triangular_pqqd()
    lhs = ore_psi(d, n, [xi + c * yi for xi, yi in zip(x, y)])
    scaled = ore_psi(d, n, [c * yi for yi in y])
    assert lhs == ore_psi(d, n, x) + scaled


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=2))
def test_degree_bound(n, i):
    d = triangular_pqqd()
    assert ore_psi(d, n, d.B.e(i)).degree <= n + 1


def test_negative_degree(tri):
    with pytest.raises(ValueError):
        ore_psi(tri, -1, E11)


# -- the four properties and the wreath product ------------------------------------------


def test_properties_on_triangular_example(tri):
    rep = ore_check_properties(tri, 6)
    assert rep.ok, rep.failures()
    assert {c.name for c in rep.checks} >= {"absorbs p", "kills q", "weak unit", "multiplicative in k[X]",
                                             "multiplicative in B", "degree bound"}


def test_properties_in_the_classical_case():
    assert ore_check_properties(classical_pqqd(), 4).ok


def test_broken_delta(tri):
    d = broken_delta_pqqd()
    assert not validate_pqqd(d)["delta(q)"].passed
    rep = ore_check_properties(d, 3)
    check = rep["multiplicative in B"]
    assert not check.passed
    n, i, j = check.witness.index
    assert 0 <= n <= 3 and 0 <= i < 3 and 0 <= j < 3
    assert check.replay()
    assert all(c.replay() for c in rep.failures())


def test_wreath_report(tri):
    rep = ore_wreath_report(tri, 3)
    assert rep.ok, rep.failures()


def test_unit_is_psi_of_one(tri):
    u = ore_unit(tri)
    assert u == mono(E11, 0) + mono(E12, 1)
    for f in (mono(E11, 2), mono(E12, 0) + mono(E11, 1)):
        g = ore_psibar(tri, f)
        assert ore_wreath_mult(tri, u, g) == g
        assert ore_wreath_mult(tri, g, u) == g


@pytest.mark.parametrize("i", range(3))
def test_x_times_b_matches_second_clause(tri, i):
    b = tri.B.e(i)
    lhs = ore_wreath_mult(tri, OrePoly.monomial(tri.B.unit, 1), OrePoly.monomial(b, 0))
    assert lhs == ore_psi(tri, 1, b)


def test_powers_of_psi_x(tri):
    x = ore_psi(tri, 1, tri.B.unit)
    power = ore_unit(tri)
    for n in range(6):
        assert power == ore_psi(tri, n, tri.B.unit)
        power = ore_wreath_mult(tri, power, x)


@given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=2))
def test_psibar_is_idempotent(n, i):
    d = triangular_pqqd()
    f = OrePoly.monomial(d.B.e(i), n)
    once = ore_psibar(d, f)
    assert ore_psibar(d, once) == once


def test_strictness_diagrams(tri):
    rep = ore_strictness_diagrams(tri, 6)
    assert rep.ok, rep.failures()


def test_tilde_basis(tri):
    gens, powers = ore_tilde_basis(tri, 4)
    assert len(gens) == 1
    assert len(powers) == 5
    assert powers[0] == ore_unit(tri)
    rep = ore_tilde_report(tri, 4)
    assert rep.ok, rep.failures()


def test_classical_multiplication_is_commutative_polynomials():
    d = classical_pqqd()
    one, g = [1, 0], [0, 1]
    f = OrePoly.monomial(g, 0) + OrePoly.monomial(one, 1)
    assert ore_wreath_mult(d, f, f) == OrePoly(2, ((1, 0), (0, 2), (1, 0)))
    for m in range(3):
        for n in range(3):
            for x in (one, g):
                for y in (one, g):
                    a, b = OrePoly.monomial(x, m), OrePoly.monomial(y, n)
                    assert ore_wreath_mult(d, a, b) == ore_wreath_mult(d, b, a)


def test_classical_tilde_is_everything():
    d = classical_pqqd()
    gens, _ = ore_tilde_basis(d, 3)
    assert len(gens) == 2
    assert ore_tilde_report(d, 3).ok


def test_polynomial_basics():
    f = OrePoly(2, ((1, 0), (0, 0), (0, 0)))
    assert f.degree == 0
    assert OrePoly(2, ()).degree == -1
    assert f.coefficient(5) == zeros(2, 1)
    assert str(OrePoly(2, ())) == "0"
    assert OrePoly.from_json(f.to_json(), 2) == f
    assert str(OrePoly.monomial([Fraction(1, 2), 0], 2)) == "(1/2, 0)X^2"
