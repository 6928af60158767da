import pytest
from hypothesis import given

from wreathlab.algebra import AlgebraHom, cyclic_group_algebra, diagonal_algebra, ground_field
from wreathlab.cells import (MonadMorphCell, WdlOneCell, F_on_2cell, F_on_cells, check_2cell,
                             check_fact_onecell, check_monad_morph, check_trivial_onecell, check_wdl_onecell,
                             compose_fact_cells, compose_morph, compose_wdl_cells, flip_cell, hom_cell,
                             horizontal, identity_cell, identity_fact_cell, identity_wdl_cell, rho_from,
                             vertical)
from wreathlab.errors import DimensionMismatch
from wreathlab.factorization import fact_of_wdl
from wreathlab.gallery.dirsum import summand_inclusion_report
from wreathlab.gallery.extension import corner_cell, e_extension_data, subalgebra_refinement
from wreathlab.gallery.triangle import triangle_algebra
from wreathlab.linalg import Mat, identity, swap, zeros
from wreathlab.wdl import flip_law

from conftest import matrices


def flip_wdl_cell(w, V):
    return WdlOneCell(w, w, flip_cell(w.A, V), flip_cell(w.B, V))


@pytest.fixture(scope="module")
def t3_corner():
    """The law extended from the corner E22 of the 2x2 = 3 algebra, with B = kZ2."""
    T = triangle_algebra()
    return e_extension_data(T, ["1/2", 0, "1/2"], cyclic_group_algebra(2))


def test_identity_cells(triangle):
    fact, w = triangle
    assert check_wdl_onecell(identity_wdl_cell(w)).ok
    assert check_fact_onecell(identity_fact_cell(fact)).ok
    assert check_2cell(identity(1), identity_wdl_cell(w), identity_wdl_cell(w)).ok
    assert check_2cell(identity(1), identity_fact_cell(fact), identity_fact_cell(fact)).ok


def test_identity_lifts_to_identity(triangle):
    fact, w = triangle
    lifted = rho_from(identity_wdl_cell(w), fact, fact)
    assert lifted.rho.xi == identity(3)


def test_hom_cells_match_hom_checks():
    Z, k = cyclic_group_algebra(2), ground_field()
    assert check_monad_morph(hom_cell(AlgebraHom(Z, k, Mat([[1, 1]])))).ok
    assert check_monad_morph(hom_cell(AlgebraHom(Z, k, Mat([[1, -1]])))).ok
    rep = check_monad_morph(hom_cell(AlgebraHom(Z, k, Mat([[1, 2]]))))
    assert not rep.ok and all(c.replay() for c in rep.failures())


def test_regular_action_is_a_monad_morphism():
    Z, k = cyclic_group_algebra(2), ground_field()
    assert check_monad_morph(MonadMorphCell(Z, k, 2, Z.mult)).ok


def test_zero_cell_fails_unitality():
    Z = cyclic_group_algebra(2)
    rep = check_monad_morph(MonadMorphCell(Z, Z, 2, zeros(4, 4)))
    assert rep["multiplicative"].passed
    assert not rep["unital"].passed and rep["unital"].replay()


def test_cell_shapes():
    Z = cyclic_group_algebra(2)
    with pytest.raises(DimensionMismatch):
        MonadMorphCell(Z, Z, 2, identity(4) @ zeros(4, 2))


def test_flip_cells_lift(triangle):
    fact, w = triangle
    c = flip_wdl_cell(w, 2)
    assert check_wdl_onecell(c).ok
    lifted = rho_from(c, fact, fact)
    assert lifted.rho.xi == swap(3, 2)
    back = F_on_cells(lifted)
    assert back.xi.xi == c.xi.xi and back.zeta.xi == c.zeta.xi
    assert back.src.psi == w.psi and back.dst.psi == w.psi


def test_perturbed_zeta_fails(triangle):
    _, w = triangle
    zeta = flip_cell(w.B, 2).xi
    swapped = zeta.select_cols([1, 0, 2, 3])
    c = WdlOneCell(w, w, flip_cell(w.A, 2), MonadMorphCell(w.B, w.B, 2, swapped))
    rep = check_wdl_onecell(c)
    assert not rep.ok
    for f in rep.failures():
        assert f.witness is not None and f.replay()


def test_rho_from_rejects_foreign_factorizations(triangle):
    fact, w = triangle
    Z = cyclic_group_algebra(2)
    with pytest.raises(DimensionMismatch):
        rho_from(identity_wdl_cell(w), fact_of_wdl(flip_law(Z, Z)), fact)


def test_corner_cell_roundtrip():
    d = e_extension_data(diagonal_algebra(2), [1, 0], ground_field())
    c = corner_cell(d)
    assert check_wdl_onecell(c).ok
    lifted = rho_from(c, fact_of_wdl(c.src), fact_of_wdl(c.dst))
    back = F_on_cells(lifted)
    assert back.src.psi == c.src.psi and back.dst.psi == c.dst.psi
    assert back.xi.xi == c.xi.xi and back.zeta.xi == c.zeta.xi


def test_corner_cell_on_the_triangle_algebra(t3_corner):
    c = corner_cell(t3_corner)
    assert c.src.A.dim == 3 and c.dst.A.dim == 1
    assert check_wdl_onecell(c).ok
    srcF, dstF = fact_of_wdl(c.src), fact_of_wdl(c.dst)
    lifted = rho_from(c, srcF, dstF)
    assert lifted.rho.xi.shape == (2, 2)
    assert check_fact_onecell(lifted).ok
    back = F_on_cells(lifted)
    assert back.xi.xi == c.xi.xi and back.zeta.xi == c.zeta.xi
    # the factorization through the strict wreath product of eA serves as well
    other = rho_from(c, t3_corner.fact, dstF)
    assert check_fact_onecell(other).ok


def test_trivial_cells():
    d = e_extension_data(diagonal_algebra(2), [1, 0], ground_field())
    w = d.wdl
    rep = check_trivial_onecell(AlgebraHom(w.A, w.A, w.A.id), AlgebraHom(w.B, w.B, w.B.id), w, w)
    assert rep.ok
    rep = check_trivial_onecell(AlgebraHom(w.A, d.corner, d.cores), AlgebraHom(w.B, w.B, w.B.id), w, d.phi)
    assert rep.ok


def test_summand_inclusions_are_reported():
    k = ground_field()
    rep = summand_inclusion_report([flip_law(k, k), flip_law(k, k)], 0)
    assert rep["commutes with psi"].passed
    assert not rep["xi/unital"].passed
    assert rep["agrees with carrier k"].passed


def test_refinement_inclusions_have_the_wrong_shape(triangle):
    _, w = triangle
    ref = subalgebra_refinement(w)
    At = ref.fact.A
    hom = AlgebraHom(At, ref.fact.R, ref.fact.alpha)
    with pytest.raises(DimensionMismatch):
        check_trivial_onecell(hom, AlgebraHom(w.B, w.B, w.B.id), w, w)


def test_two_cells_between_different_homs_fail():
    Z, k = cyclic_group_algebra(2), ground_field()
    w = flip_law(Z, k)
    plus = WdlOneCell(w, flip_law(k, k), hom_cell(AlgebraHom(Z, k, Mat([[1, 1]]))), identity_cell(k))
    minus = WdlOneCell(w, flip_law(k, k), hom_cell(AlgebraHom(Z, k, Mat([[1, -1]]))), identity_cell(k))
    assert check_wdl_onecell(plus).ok and check_wdl_onecell(minus).ok
    rep = check_2cell(identity(1), plus, minus)
    assert not rep["xi square"].passed and rep["xi square"].replay()
    # the zero 2-cell is natural between any pair of cells
    assert check_2cell(zeros(1, 1), plus, minus).ok


@given(matrices(3, 2))
def test_any_map_is_a_two_cell_between_flip_cells(omega):
    Z = cyclic_group_algebra(2)
    w = flip_law(Z, Z)
    assert check_2cell(omega, flip_wdl_cell(w, 2), flip_wdl_cell(w, 3)).ok


@given(matrices(2, 2))
def test_wdl_two_cells_lift(triangle, omega):
    fact, w = triangle
    src = rho_from(flip_wdl_cell(w, 2), fact, fact)
    dst = rho_from(flip_wdl_cell(w, 2), fact, fact)
    assert check_2cell(omega, flip_wdl_cell(w, 2), flip_wdl_cell(w, 2)).ok
    assert check_2cell(F_on_2cell(omega), src, dst).ok


def test_composition(triangle):
    fact, w = triangle
    a = rho_from(flip_wdl_cell(w, 2), fact, fact)
    b = rho_from(flip_wdl_cell(w, 3), fact, fact)
    ab = compose_fact_cells(a, b)
    assert ab.V == 6 and check_fact_onecell(ab).ok
    via_F = compose_wdl_cells(F_on_cells(a), F_on_cells(b))
    assert check_wdl_onecell(via_F).ok
    assert F_on_cells(ab).xi.xi == via_F.xi.xi and F_on_cells(ab).zeta.xi == via_F.zeta.xi
    ident = compose_wdl_cells(identity_wdl_cell(w), F_on_cells(a))
    assert ident.xi.xi == a.xi.xi


def test_composing_monad_morphisms():
    Z, k = cyclic_group_algebra(2), ground_field()
    eps = hom_cell(AlgebraHom(Z, k, Mat([[1, 1]])))
    c = compose_morph(flip_cell(Z, 2), eps)
    assert c.V == 2 and check_monad_morph(c).ok
    with pytest.raises(DimensionMismatch):
        compose_morph(eps, flip_cell(Z, 2))


@given(matrices(2, 2), matrices(2, 2), matrices(3, 3))
def test_two_cell_compositions(w1, w2, w3):
    Z = cyclic_group_algebra(2)
    w = flip_law(Z, Z)
    c2 = flip_wdl_cell(w, 2)
    assert check_2cell(vertical(w2, w1), c2, c2).ok
    c6 = compose_wdl_cells(c2, flip_wdl_cell(w, 3))
    assert check_2cell(horizontal(w1, w3), c6, c6).ok
