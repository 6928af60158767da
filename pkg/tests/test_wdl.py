import pytest
from hypothesis import given, strategies as st

from wreathlab.algebra import (cyclic_group_algebra, dual_numbers, ground_field, tensor_algebra,
                               validate_algebra)
from wreathlab.errors import CheckFailed, DimensionMismatch
from wreathlab.linalg import Mat, identity, kron, zeros
from wreathlab.wdl import (Wdl, certify_wreath, check_wdl, check_wdl_alt, flip_law, is_strict, kappa_left,
                           kappa_right, nonunital_mult, psibar, psibar_report, strict_wreath, weak_wreath)

from conftest import SMALL_ALGEBRAS, transport, unitriangular


def counit_law():
    """``a (x) 1 -> 1 (x) eps(a) 1`` on kZ2 and k: multiplicative but not weakly unital."""
    Z, k = cyclic_group_algebra(2), ground_field()
    return Wdl(Z, k, Mat([[1, 1], [0, 0]]))


@pytest.mark.parametrize("A", SMALL_ALGEBRAS)
@pytest.mark.parametrize("B", SMALL_ALGEBRAS[:3])
def test_flip_is_strict(A, B):
    w = flip_law(A(), B())
    assert check_wdl(w.A, w.B, w.psi).ok
    assert is_strict(w).ok
    assert psibar(w) == identity(w.A.dim * w.B.dim)


def test_flip_wreath_is_the_tensor_algebra():
    Z, D = cyclic_group_algebra(2), dual_numbers()
    wp = weak_wreath(flip_law(Z, D))
    assert wp.product.dim == 4
    assert wp.product.mult == tensor_algebra(D, Z).mult


def test_strict_wreath_of_flip():
    Z, D = cyclic_group_algebra(2), dual_numbers()
    assert validate_algebra(strict_wreath(flip_law(Z, D))).ok


def test_counit_law_fails_the_weak_unit():
    w = counit_law()
    rep = check_wdl(w.A, w.B, w.psi)
    assert rep["multiplicative in A"].passed and rep["multiplicative in B"].passed
    c = rep["weak unit"]
    assert not c.passed and c.witness.index == (0, 1) and c.replay()
    with pytest.raises(CheckFailed):
        weak_wreath(w)


def test_zero_law_satisfies_the_diagrams():
    # every composite in the three diagrams contains psi, so psi = 0 passes them
    Z = cyclic_group_algebra(2)
    rep = check_wdl(Z, Z, zeros(4, 4))
    assert rep.ok
    assert not is_strict(Wdl(Z, Z, zeros(4, 4))).ok
    assert weak_wreath(Wdl(Z, Z, zeros(4, 4))).product.dim == 0


def test_split_unit_form_agrees(triangle):
    _, w = triangle
    assert check_wdl_alt(w.A, w.B, w.psi).ok
    bad = counit_law()
    assert not check_wdl_alt(bad.A, bad.B, bad.psi).ok


def test_shape_mismatch():
    Z = cyclic_group_algebra(2)
    with pytest.raises(DimensionMismatch):
        Wdl(Z, Z, identity(3))


def test_triangle_psibar(triangle):
    fact, w = triangle
    assert psibar_report(w).ok
    pb = psibar(w)
    assert pb == kappa_left(w.A, w.B, w.psi) == kappa_right(w.A, w.B, w.psi)
    assert pb == fact.iota @ fact.pi
    wp = weak_wreath(w)
    assert wp.product.dim == 3
    assert certify_wreath(wp).ok


def test_nonunital_mult_is_associative(triangle):
    _, w = triangle
    mu = nonunital_mult(w)
    assert mu.shape == (4, 16)


def _conjugate(w: Wdl, SA: Mat, SB: Mat) -> Wdl:
    """The same law written in new bases of A and B."""
    A2, SAinv = transport(w.A, SA)
    B2, SBinv = transport(w.B, SB)
    return Wdl(A2, B2, kron(SBinv, SAinv) @ w.psi @ kron(SA, SB))


@given(st.data())
def test_triangle_law_in_any_basis(triangle, data):
    _, w = triangle
    SA, SB = data.draw(unitriangular(2)), data.draw(unitriangular(2))
    v = _conjugate(w, SA, SB)
    assert check_wdl(v.A, v.B, v.psi).ok
    assert psibar_report(v).ok
    wp = weak_wreath(v)
    assert wp.product.dim == 3
    assert not is_strict(v).ok


@given(st.data())
def test_flip_in_any_basis(data):
    A, B = cyclic_group_algebra(3), dual_numbers()
    v = _conjugate(flip_law(A, B), data.draw(unitriangular(3)), data.draw(unitriangular(2)))
    assert check_wdl(v.A, v.B, v.psi).ok and is_strict(v).ok
    assert psibar(v) == identity(6)


@given(st.data())
def test_perturbing_psi_is_detected_with_replayable_witness(triangle, data):
    _, w = triangle
    i, j = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    delta = data.draw(st.fractions(-2, 2, max_denominator=3).filter(bool))
    e = [[0] * 4 for _ in range(4)]
    e[i][j] = delta
    bad = w.psi + Mat(e)
    rep = check_wdl(w.A, w.B, bad)
    assert not rep.ok
    for c in rep.failures():
        assert c.witness is not None and c.replay()
