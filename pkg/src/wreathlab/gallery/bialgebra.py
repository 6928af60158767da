"""
Weak bialgebras, their module algebras, and the weak smash product law
``a (x) h -> h_1 (x) a <- h_2``.

``cap_bar(h) = eps(h 1_1) 1_2`` and ``cap(h) = 1_1 eps(h 1_2)`` project onto the
base subalgebras. ``R = cap_bar(H)^op`` is separable Frobenius, and the smash
law is the lift of a law over ``R``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import (
    Algebra,
    cyclic_group_algebra,
    diagonal_algebra,
    is_algebra_hom,
    matrix_units_algebra,
    subalgebra,
    tensor_algebra,
)
from ..errors import DimensionMismatch
from ..linalg import Mat, from_columns, kron, solve, swap, zeros
from ..report import Report, compare
from ..wdl import Wdl, check_wdl
from .frobenius import FrobeniusStructure, actions, sf_construct, tensor_over_R, validate_frobenius


@dataclass(frozen=True, eq=False)
class WeakBialgebra:
    H: Algebra
    comult: Mat      # H -> H (x) H
    counit: Mat      # H -> k

    def __post_init__(self):
        h = self.H.dim
        if self.comult.shape != (h * h, h) or self.counit.shape != (1, h):
            raise DimensionMismatch("comultiplication must be h^2 x h and counit 1 x h")

    @property
    def delta_one(self) -> Mat:
        return self.comult @ self.H.unit

    @property
    def eps_mu(self) -> Mat:
        """``h (x) h' -> eps(h h')``."""
        return self.counit @ self.H.mult


@dataclass(frozen=True, eq=False)
class ModuleAlgebra:
    A: Algebra
    action: Mat      # A (x) H -> A, a (x) h -> a <- h


def validate_weak_bialgebra(wb: WeakBialgebra) -> Report:
    H, d, e = wb.H, wb.comult, wb.counit
    n = H.dim
    I = H.id
    HH, HHH = tensor_algebra(H, H), tensor_algebra(H, H, H)
    d1 = wb.delta_one
    em = wb.eps_mu
    rep = Report("weak bialgebra")
    rep.add(compare("coassociative", "(delta x H) delta == (H x delta) delta",
                    kron(d, I) @ d, kron(I, d) @ d, (n,)))
    rep.add(compare("left counit", "(eps x H) delta == id", kron(e, I) @ d, I, (n,)))
    rep.add(compare("right counit", "(H x eps) delta == id", kron(I, e) @ d, I, (n,)))
    rep.add(compare("multiplicative", "delta mu == mu_HH (delta x delta)",
                    d @ H.mult, HH.mult @ kron(d, d), (n, n)))
    abc = e @ H.mult @ kron(H.mult, I)
    rep.add(compare("weak counit, outer", "eps(a b_1) eps(b_2 c) == eps(a b c)",
                    kron(em, em) @ kron(I, d, I), abc, (n, n, n)))
    rep.add(compare("weak counit, crossed", "eps(a b_2) eps(b_1 c) == eps(a b c)",
                    kron(em, em) @ kron(I, swap(n, n), I) @ kron(I, d, I), abc, (n, n, n)))
    dd1 = kron(d, I) @ d1
    one = H.unit
    rep.add(compare("weak unit, left", "(delta(1) x 1)(1 x delta(1)) == delta^2(1)",
                    HHH.mult @ kron(kron(d1, one), kron(one, d1)), dd1))
    rep.add(compare("weak unit, right", "(1 x delta(1))(delta(1) x 1) == delta^2(1)",
                    HHH.mult @ kron(kron(one, d1), kron(d1, one)), dd1))
    return rep


def is_ordinary_bialgebra(wb: WeakBialgebra) -> Report:
    H = wb.H
    return Report("bialgebra", [
        compare("unital comultiplication", "delta(1) == 1 x 1", wb.delta_one, kron(H.unit, H.unit)),
        compare("multiplicative counit", "eps mu == eps x eps", wb.eps_mu, kron(wb.counit, wb.counit), (H.dim, H.dim)),
    ])


def cap_maps(wb: WeakBialgebra):
    """``(cap, cap_bar)`` as endomorphisms of H."""
    H = wb.H
    I = H.id
    d1, em = wb.delta_one, wb.eps_mu
    cap_bar = kron(em, I) @ kron(I, d1)
    cap = kron(I, em) @ kron(swap(H.dim, H.dim), I) @ kron(I, d1)
    return cap, cap_bar


def cap_report(wb: WeakBialgebra) -> Report:
    H, d, e = wb.H, wb.comult, wb.counit
    n = H.dim
    I, mu = H.id, H.mult
    cap, bar = cap_maps(wb)
    d1 = wb.delta_one
    rep = Report("base projections")
    rep.add(compare("counit of cap", "eps cap == eps", e @ cap, e, (n,)))
    rep.add(compare("counit of cap_bar", "eps cap_bar == eps", e @ bar, e, (n,)))
    # 1_1 (x) x 1_2 and 1_1 x (x) 1_2 as functions of x
    right_slot = kron(I, mu) @ kron(I, swap(n, n)) @ kron(d1, I)
    left_slot = kron(mu, I) @ kron(swap(n, n), I) @ kron(I, d1)
    rep.add(compare("comultiplication of cap", "delta cap(h) == 1_1 (x) cap(h) 1_2",
                    d @ cap, right_slot @ cap, (n,)))
    rep.add(compare("comultiplication of cap_bar", "delta cap_bar(h) == 1_1 cap_bar(h) (x) 1_2",
                    d @ bar, left_slot @ bar, (n,)))
    for name, p in (("cap", cap), ("cap_bar", bar)):
        rep.add(compare(f"{name} absorbs cap", f"{name}(cap(h) h') == {name}(h h')",
                        p @ mu @ kron(cap, I), p @ mu, (n, n)))
        rep.add(compare(f"{name} absorbs cap_bar", f"{name}(cap_bar(h) h') == {name}(h h')",
                        p @ mu @ kron(bar, I), p @ mu, (n, n)))
    rep.add(compare("bases commute", "cap_bar(h) cap(h') == cap(h') cap_bar(h)",
                    mu @ kron(bar, cap), mu @ kron(cap, bar) @ swap(n, n), (n, n)))
    rep.add(compare("cap on products", "cap(h cap(h')) == cap(h) cap(h')",
                    cap @ mu @ kron(I, cap), mu @ kron(cap, cap), (n, n)))
    rep.add(compare("cap of caps", "cap(cap(h) cap(h')) == cap(h) cap(h')",
                    cap @ mu @ kron(cap, cap), mu @ kron(cap, cap), (n, n)))
    rep.add(compare("cap_bar on products", "cap_bar(h cap_bar(h')) == cap_bar(h) cap_bar(h')",
                    bar @ mu @ kron(I, bar), mu @ kron(bar, bar), (n, n)))
    rep.add(compare("cap_bar cap", "cap_bar cap == cap_bar", bar @ cap, bar, (n,)))
    return rep


def base_frobenius(wb: WeakBialgebra):
    """``(R, inclusion R -> H, FrobeniusStructure)`` for ``R = cap_bar(H)^op``."""
    H = wb.H
    _, bar = cap_maps(wb)
    sub, incl = subalgebra(H, bar)
    R = sub.opposite()
    t_H = kron(bar, H.id) @ wb.delta_one
    t = solve(kron(incl, incl), t_H)
    return R, incl, FrobeniusStructure(R, wb.counit @ incl, t)


def validate_module_algebra(wb: WeakBialgebra, m: ModuleAlgebra) -> Report:
    A, H = m.A, wb.H
    a, n = A.dim, H.dim
    act = m.action
    if act.shape != (a, a * n):
        raise DimensionMismatch(f"action must be {a}x{a * n}, got {act.shape}")
    IA = A.id
    _, bar = cap_maps(wb)
    rep = Report("module algebra")
    rep.add(compare("associative action", "(a <- h) <- h' == a <- h h'",
                    act @ kron(act, H.id), act @ kron(IA, H.mult), (a, n, n)))
    rep.add(compare("unital action", "a <- 1 == a", act @ kron(IA, H.unit), IA, (a,)))
    # a (x) a' (x) h -> a (x) h_1 (x) a' (x) h_2 -> (a <- h_1)(a' <- h_2)
    lhs = A.mult @ kron(act, act) @ kron(IA, swap(a, n), H.id) @ kron(IA, IA, wb.comult)
    rep.add(compare("multiplicative action", "(a <- h_1)(a' <- h_2) == a a' <- h",
                    lhs, act @ kron(A.mult, H.id), (a, a, n)))
    one = act @ kron(A.unit, H.id)
    rep.add(compare("unit action", "1 <- h == 1 <- cap_bar(h)", one, one @ bar, (n,)))
    return rep


def smash_psi(wb: WeakBialgebra, m: ModuleAlgebra) -> Mat:
    """``a (x) h -> h_1 (x) a <- h_2``."""
    A, H = m.A, wb.H
    return kron(H.id, m.action) @ kron(swap(A.dim, H.dim), H.id) @ kron(A.id, wb.comult)


@dataclass(frozen=True, eq=False)
class Smash:
    wdl: Wdl
    R: Algebra
    frobenius: FrobeniusStructure
    report: Report


def smash_data(wb: WeakBialgebra, m: ModuleAlgebra) -> Smash:
    A, H = m.A, wb.H
    rep = Report("weak smash product")
    rep.extend(validate_weak_bialgebra(wb), "H")
    rep.extend(cap_report(wb), "H")
    rep.extend(validate_module_algebra(wb, m), "A")
    rep.raise_if_failed()
    psi = smash_psi(wb, m)
    w = Wdl(A, H, psi)
    rep.extend(check_wdl(A, H, psi))

    R, incl, s = base_frobenius(wb)
    rep.extend(validate_frobenius(s), "R")
    cap, _ = cap_maps(wb)
    etaH = cap @ incl
    etaA = m.action @ kron(A.unit, incl)
    rep.extend(is_algebra_hom(etaH, R, H), "cap on R")
    rep.extend(is_algebra_hom(etaA, R, A), "1 <- r on R")
    rep.raise_if_failed()
    AB = tensor_over_R(actions(A, etaA)[0], actions(H, etaH)[1], s)
    BA = tensor_over_R(actions(H, etaH)[0], actions(A, etaA)[1], s)
    rep.add(compare("projects to R", "proj psi kills the relations of A (x)_R H",
                    BA.proj @ psi @ AB.relations, zeros(BA.dim, AB.relations.cols)))
    phi_R = BA.proj @ psi @ AB.incl
    sf = sf_construct(A, H, etaA, etaH, phi_R, s)
    rep.extend(sf.report, "over R")
    rep.add(compare("equals the lifted R-law", "incl phi_R proj == psi", sf.wdl.psi, psi, (A.dim, H.dim)))
    return Smash(w, R, s, rep)


def smash_wdl(wb: WeakBialgebra, m: ModuleAlgebra) -> Wdl:
    d = smash_data(wb, m)
    d.report.raise_if_failed()
    return d.wdl


# -- fixtures --------------------------------------------------------------------------


def diagonal_weak_bialgebra(n: int = 2) -> WeakBialgebra:
    """Functions on n points: ``delta(p_i) = p_i (x) p_i``, ``eps(p_i) = 1``."""
    H = diagonal_algebra(n)
    comult = from_columns([kron(H.e(i), H.e(i)).column(0) for i in range(n)], n * n)
    return WeakBialgebra(H, comult, Mat([[1] * n]))


def diagonal_module_algebra(n: int = 2) -> ModuleAlgebra:
    """``k^n`` acted on componentwise by the diagonal weak bialgebra."""
    A = diagonal_algebra(n)
    return ModuleAlgebra(A, A.mult)


def pair_groupoid(n: int = 2) -> WeakBialgebra:
    """Algebra of the pair groupoid on n objects: matrix units, each one grouplike."""
    H = matrix_units_algebra([(r, c) for r in range(n) for c in range(n)], n, f"kG{n}")
    h = H.dim
    comult = from_columns([kron(H.e(i), H.e(i)).column(0) for i in range(h)], h * h)
    return WeakBialgebra(H, comult, Mat([[1] * h]))


def pair_groupoid_module(n: int = 2) -> ModuleAlgebra:
    """Functions on the objects, ``p_x <- E_yz = delta_xy p_z``."""
    A = diagonal_algebra(n)
    cols = []
    for x in range(n):
        for r in range(n):
            for c in range(n):
                cols.append(A.e(c).column(0) if x == r else [0] * n)
    return ModuleAlgebra(A, from_columns(cols, n))


def group_bialgebra(order: int = 2) -> WeakBialgebra:
    """The group algebra of a cyclic group, ``delta(g) = g (x) g``."""
    H = cyclic_group_algebra(order)
    h = H.dim
    comult = from_columns([kron(H.e(i), H.e(i)).column(0) for i in range(h)], h * h)
    return WeakBialgebra(H, comult, Mat([[1] * h]))


def trivial_module(wb: WeakBialgebra, A: Algebra) -> ModuleAlgebra:
    """``a <- h = a eps(h)``."""
    return ModuleAlgebra(A, kron(A.id, wb.counit))
