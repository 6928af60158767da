"""
1-cells and 2-cells between weak distributive laws and between bilinear
factorizations, with the comparison functor that forgets ``rho`` and the
construction of ``rho`` that inverts it.

A monad morphism ``(V, xi): A' -> A`` is a map ``xi: A' (x) V -> V (x) A``
intertwining the multiplications and units. All tensor bookkeeping is strict
in coordinates, so composition needs no coherence isomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, AlgebraHom, is_algebra_hom
from .errors import DimensionMismatch
from .factorization import BilinFact, pi_of, wdl_of_fact
from .linalg import Mat, identity, kron, swap
from .report import Report, compare
from .wdl import Wdl, psibar


@dataclass(frozen=True, eq=False)
class MonadMorphCell:
    src: Algebra
    dst: Algebra
    V: int
    xi: Mat

    def __post_init__(self):
        want = (self.V * self.dst.dim, self.src.dim * self.V)
        if self.xi.shape != want:
            raise DimensionMismatch(f"xi must be {want[0]}x{want[1]}, got {self.xi.shape}")


def check_monad_morph(c: MonadMorphCell) -> Report:
    Ap, A, v = c.src, c.dst, c.V
    IV = identity(v)
    rep = Report("monad morphism")
    rep.add(compare("multiplicative", "xi (mu' x V) == (V x mu)(xi x A)(A' x xi)",
                    c.xi @ kron(Ap.mult, IV),
                    kron(IV, A.mult) @ kron(c.xi, A.id) @ kron(Ap.id, c.xi), (Ap.dim, Ap.dim, v)))
    rep.add(compare("unital", "xi (eta' x V) == V x eta",
                    c.xi @ kron(Ap.unit, IV), kron(IV, A.unit), (v,)))
    return rep


def hom_cell(f: AlgebraHom) -> MonadMorphCell:
    """An algebra map viewed as a monad morphism with trivial carrier."""
    return MonadMorphCell(f.src, f.dst, 1, f.map)


def identity_cell(A: Algebra) -> MonadMorphCell:
    return MonadMorphCell(A, A, 1, A.id)


def compose_morph(first: MonadMorphCell, second: MonadMorphCell) -> MonadMorphCell:
    """``first: A'' -> A'`` then ``second: A' -> A``, carrier ``W (x) V``.

    The composite is ``(W x xi2)(xi1 x V): A'' W V -> W A' V -> W V A``.
    """
    if first.dst != second.src:
        raise DimensionMismatch("cells are not composable")
    W, V = first.V, second.V
    xi = kron(identity(W), second.xi) @ kron(first.xi, identity(V))
    return MonadMorphCell(first.src, second.dst, W * V, xi)


def flip_cell(A: Algebra, V: int) -> MonadMorphCell:
    """``a (x) v -> v (x) a``: the identity monad morphism with carrier ``V``."""
    return MonadMorphCell(A, A, V, swap(A.dim, V))


def _same_carrier(*cells):
    if len({c.V for c in cells}) != 1:
        raise DimensionMismatch("cells must share the carrier V")


@dataclass(frozen=True, eq=False)
class WdlOneCell:
    src: Wdl
    dst: Wdl
    xi: MonadMorphCell
    zeta: MonadMorphCell

    def __post_init__(self):
        _same_carrier(self.xi, self.zeta)
        if self.xi.src != self.src.A or self.xi.dst != self.dst.A:
            raise DimensionMismatch("xi must go from the source A to the target A")
        if self.zeta.src != self.src.B or self.zeta.dst != self.dst.B:
            raise DimensionMismatch("zeta must go from the source B to the target B")

    @property
    def V(self) -> int:
        return self.xi.V


@dataclass(frozen=True, eq=False)
class FactOneCell:
    src: BilinFact
    dst: BilinFact
    xi: MonadMorphCell
    zeta: MonadMorphCell
    rho: MonadMorphCell

    def __post_init__(self):
        _same_carrier(self.xi, self.zeta, self.rho)
        pairs = [(self.xi, self.src.A, self.dst.A), (self.zeta, self.src.B, self.dst.B),
                 (self.rho, self.src.R, self.dst.R)]
        for c, s, d in pairs:
            if c.src != s or c.dst != d:
                raise DimensionMismatch("cell endpoints do not match the factorizations")

    @property
    def V(self) -> int:
        return self.xi.V


def wdl_cell_sides(c: WdlOneCell):
    """Both sides of the 1-cell condition, maps ``A' B' V -> V B A``."""
    Ap, Bp = c.src.A, c.src.B
    A, B = c.dst.A, c.dst.B
    IV = identity(c.V)
    pb = psibar(c.dst, verify=False)
    lhs = kron(IV, c.dst.psi) @ kron(c.xi.xi, B.id) @ kron(Ap.id, c.zeta.xi)
    rhs = (kron(IV, pb) @ kron(c.zeta.xi, A.id) @ kron(Bp.id, c.xi.xi)
           @ kron(c.src.psi, IV))
    return lhs, rhs


def check_wdl_onecell(c: WdlOneCell) -> Report:
    rep = Report("1-cell of weak distributive laws")
    rep.extend(check_monad_morph(c.xi), "xi")
    rep.extend(check_monad_morph(c.zeta), "zeta")
    lhs, rhs = wdl_cell_sides(c)
    rep.add(compare("commutes with psi",
                    "(V x psi)(xi x B)(A' x zeta) == (V x psibar)(zeta x A)(B' x xi)(psi' x V)",
                    lhs, rhs, (c.src.A.dim, c.src.B.dim, c.V)))
    return rep


def check_fact_onecell(c: FactOneCell) -> Report:
    f, g = c.src, c.dst
    IV = identity(c.V)
    rep = Report("1-cell of bilinear factorizations")
    rep.extend(check_monad_morph(c.xi), "xi")
    rep.extend(check_monad_morph(c.zeta), "zeta")
    rep.extend(check_monad_morph(c.rho), "rho")
    rep.add(compare("alpha square", "rho (alpha' x V) == (V x alpha) xi",
                    c.rho.xi @ kron(f.alpha, IV), kron(IV, g.alpha) @ c.xi.xi, (f.A.dim, c.V)))
    rep.add(compare("beta square", "rho (beta' x V) == (V x beta) zeta",
                    c.rho.xi @ kron(f.beta, IV), kron(IV, g.beta) @ c.zeta.xi, (f.B.dim, c.V)))
    return rep


def F_on_cells(c: FactOneCell) -> WdlOneCell:
    """Forget ``rho``."""
    return WdlOneCell(wdl_of_fact(c.src, verify=False), wdl_of_fact(c.dst, verify=False), c.xi, c.zeta)


def F_on_2cell(omega: Mat) -> Mat:
    return omega


def rho_from(c: WdlOneCell, srcF: BilinFact, dstF: BilinFact) -> FactOneCell:
    """Lift a 1-cell of laws to factorizations: ``rho = (V x pi)(zeta x A)(B' x xi)(iota' x V)``."""
    for F, w, side in ((srcF, c.src, "source"), (dstF, c.dst, "target")):
        if wdl_of_fact(F, verify=False).psi != w.psi:
            raise DimensionMismatch(f"the {side} factorization does not induce the {side} law")
    IV = identity(c.V)
    A = c.dst.A
    Bp = c.src.B
    rho = (kron(IV, pi_of(dstF)) @ kron(c.zeta.xi, A.id) @ kron(Bp.id, c.xi.xi)
           @ kron(srcF.iota, IV))
    out = FactOneCell(srcF, dstF, c.xi, c.zeta, MonadMorphCell(srcF.R, dstF.R, c.V, rho))
    check_fact_onecell(out).raise_if_failed()
    return out


def check_2cell(omega: Mat, src, dst) -> Report:
    """``omega: V -> V'`` intertwining each constituent pair: ``(omega x X) xi == xi' (X' x omega)``."""
    if type(src) is not type(dst):
        raise DimensionMismatch("2-cells connect 1-cells of the same kind")
    if omega.shape != (dst.V, src.V):
        raise DimensionMismatch(f"omega must be {dst.V}x{src.V}, got {omega.shape}")
    pairs = [("xi", src.xi, dst.xi), ("zeta", src.zeta, dst.zeta)]
    if isinstance(src, FactOneCell):
        pairs.append(("rho", src.rho, dst.rho))
    rep = Report("2-cell")
    for name, c, d in pairs:
        if c.src != d.src or c.dst != d.dst:
            raise DimensionMismatch("2-cell endpoints differ")
        rep.add(compare(f"{name} square", f"(omega x X) {name} == {name}' (X' x omega)",
                        kron(omega, c.dst.id) @ c.xi, d.xi @ kron(c.src.id, omega),
                        (c.src.dim, src.V)))
    return rep


def check_trivial_onecell(xi: AlgebraHom, zeta: AlgebraHom, src: Wdl, dst: Wdl) -> Report:
    """Pairs of algebra maps with ``psibar (zeta x xi) psi' == psi (xi x zeta)``."""
    if xi.src != src.A or xi.dst != dst.A or zeta.src != src.B or zeta.dst != dst.B:
        raise DimensionMismatch("the maps do not connect the algebras of the two laws")
    rep = Report("1-cell with trivial carrier")
    rep.extend(is_algebra_hom(xi.map, xi.src, xi.dst), "xi")
    rep.extend(is_algebra_hom(zeta.map, zeta.src, zeta.dst), "zeta")
    pb = psibar(dst, verify=False)
    lhs = pb @ kron(zeta.map, xi.map) @ src.psi
    rhs = dst.psi @ kron(xi.map, zeta.map)
    rep.add(compare("commutes with psi", "psibar (zeta x xi) psi' == psi (xi x zeta)",
                    lhs, rhs, (src.A.dim, src.B.dim)))
    general = check_wdl_onecell(WdlOneCell(src, dst, hom_cell(xi), hom_cell(zeta)))
    rep.add(compare("agrees with carrier k", "same verdict as the general 1-cell condition at V = k",
                    Mat([[int(general.ok)]]), Mat([[int(rep.ok)]])))
    return rep


def identity_wdl_cell(w: Wdl) -> WdlOneCell:
    return WdlOneCell(w, w, identity_cell(w.A), identity_cell(w.B))


def identity_fact_cell(f: BilinFact) -> FactOneCell:
    return FactOneCell(f, f, identity_cell(f.A), identity_cell(f.B), identity_cell(f.R))


def compose_wdl_cells(first: WdlOneCell, second: WdlOneCell) -> WdlOneCell:
    if first.dst.psi != second.src.psi:
        raise DimensionMismatch("cells are not composable")
    return WdlOneCell(first.src, second.dst, compose_morph(first.xi, second.xi),
                      compose_morph(first.zeta, second.zeta))


def compose_fact_cells(first: FactOneCell, second: FactOneCell) -> FactOneCell:
    return FactOneCell(first.src, second.dst, compose_morph(first.xi, second.xi),
                       compose_morph(first.zeta, second.zeta), compose_morph(first.rho, second.rho))


def vertical(omega2: Mat, omega1: Mat) -> Mat:
    """``omega1`` then ``omega2``."""
    return omega2 @ omega1


def horizontal(omega_first: Mat, omega_second: Mat) -> Mat:
    """Whiskered product on carriers ``W (x) V`` of composed cells."""
    return kron(omega_first, omega_second)
