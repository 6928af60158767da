"""
Weak distributive laws ``psi: A (x) B -> B (x) A`` and their weak wreath products.

A weak distributive law is compatible with both multiplications, while the
unit conditions are relaxed to a single identity between two canonical
endomorphisms of ``B (x) A``. Those endomorphisms coincide with an idempotent
``psibar``; splitting it yields the unital retract algebra ``B (x)_psi A``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    AlgebraHom,
    Bimodule,
    is_algebra_hom,
    is_bimodule_map,
    outer_bimodule,
    validate_algebra,
)
from .errors import DimensionMismatch, InternalInconsistency
from .linalg import Mat, Splitting, identity, kron, rref, split_idempotent, swap, unravel
from .report import Report, compare


@dataclass(frozen=True, eq=False)
class Wdl:
    A: Algebra
    B: Algebra
    psi: Mat

    def __post_init__(self):
        a, b = self.A.dim, self.B.dim
        if self.psi.shape != (b * a, a * b):
            raise DimensionMismatch(f"psi must be {b * a}x{a * b}, got {self.psi.shape}")

    def check(self) -> Report:
        return check_wdl(self.A, self.B, self.psi)


@dataclass(frozen=True, eq=False)
class WreathProduct:
    wdl: Wdl
    psibar: Mat
    splitting: Splitting
    product: Algebra
    alpha: AlgebraHom
    beta: AlgebraHom

    @property
    def proj(self) -> Mat:
        return self.splitting.proj

    @property
    def incl(self) -> Mat:
        return self.splitting.incl

    def bimodule(self) -> Bimodule:
        """The retract as a B-A bimodule, actions transported through the splitting."""
        A, B = self.wdl.A, self.wdl.B
        return Bimodule(
            B, A,
            self.proj @ kron(B.mult, A.id) @ kron(B.id, self.incl),
            self.proj @ kron(B.id, A.mult) @ kron(self.incl, A.id),
        )


def _shape_ok(A, B, psi):
    if psi.shape != (B.dim * A.dim, A.dim * B.dim):
        raise DimensionMismatch(f"psi must be {B.dim * A.dim}x{A.dim * B.dim}, got {psi.shape}")


def kappa_left(A: Algebra, B: Algebra, psi: Mat) -> Mat:
    """``(B x mu_A)(psi x A)(eta_A x B x A)``."""
    return kron(B.id, A.mult) @ kron(psi, A.id) @ kron(A.unit, B.id, A.id)


def kappa_right(A: Algebra, B: Algebra, psi: Mat) -> Mat:
    """``(mu_B x A)(B x psi)(B x A x eta_B)``."""
    return kron(B.mult, A.id) @ kron(B.id, psi) @ kron(B.id, A.id, B.unit)


def check_wdl(A: Algebra, B: Algebra, psi: Mat) -> Report:
    """All three defining diagrams; every failing one is reported."""
    _shape_ok(A, B, psi)
    a, b = A.dim, B.dim
    IA, IB = A.id, B.id
    rep = Report("weak distributive law")
    rep.add(compare(
        "multiplicative in A", "psi (mu_A x B) == (B x mu_A)(psi x A)(A x psi)",
        psi @ kron(A.mult, IB), kron(IB, A.mult) @ kron(psi, IA) @ kron(IA, psi), (a, a, b),
    ))
    rep.add(compare(
        "multiplicative in B", "psi (A x mu_B) == (mu_B x A)(B x psi)(psi x B)",
        psi @ kron(IA, B.mult), kron(B.mult, IA) @ kron(IB, psi) @ kron(psi, IB), (a, b, b),
    ))
    rep.add(compare(
        "weak unit", "(mu_B x A)(B x psi)(B x A x eta_B) == (B x mu_A)(psi x A)(eta_A x B x A)",
        kappa_right(A, B, psi), kappa_left(A, B, psi), (b, a),
    ))
    return rep


def check_wdl_alt(A: Algebra, B: Algebra, psi: Mat) -> Report:
    """The pair of one-sided unit identities equivalent to the weak unit diagram."""
    _shape_ok(A, B, psi)
    IA, IB = A.id, B.id
    rep = Report("weak unit, split form")
    rep.add(compare(
        "unit on B", "psi (eta_A x B) == (mu_B x A)(B x psi)(B x eta_A x eta_B)",
        psi @ kron(A.unit, IB), kron(B.mult, IA) @ kron(IB, psi) @ kron(IB, A.unit, B.unit), (B.dim,),
    ))
    rep.add(compare(
        "unit on A", "psi (A x eta_B) == (B x mu_A)(psi x A)(eta_A x eta_B x A)",
        psi @ kron(IA, B.unit), kron(IB, A.mult) @ kron(psi, IA) @ kron(A.unit, B.unit, IA), (A.dim,),
    ))
    return rep


def is_strict(w: Wdl) -> Report:
    """The two unit conditions that make a weak law an ordinary distributive law."""
    A, B, psi = w.A, w.B, w.psi
    rep = Report("strict distributive law")
    rep.add(compare("unital in A", "psi (A x eta_B) == eta_B x A",
                    psi @ kron(A.id, B.unit), kron(B.unit, A.id), (A.dim,)))
    rep.add(compare("unital in B", "psi (eta_A x B) == B x eta_A",
                    psi @ kron(A.unit, B.id), kron(B.id, A.unit), (B.dim,)))
    return rep


def flip_law(A: Algebra, B: Algebra) -> Wdl:
    """The flip ``a (x) b -> b (x) a``; its wreath product is the tensor algebra."""
    return Wdl(A, B, swap(A.dim, B.dim))


def nonunital_mult(w: Wdl, verify: bool = True) -> Mat:
    """``(mu_B x mu_A)(B x psi x A)`` on ``B (x) A``."""
    A, B = w.A, w.B
    mu = kron(B.mult, A.mult) @ kron(B.id, w.psi, A.id)
    if verify:
        n = B.dim * A.dim
        I = identity(n)
        c = compare("associativity", "mu (mu x BA) == mu (BA x mu)",
                    mu @ kron(mu, I), mu @ kron(I, mu), (n, n, n))
        Report("non-unital multiplication", [c]).raise_if_failed()
    return mu


def psibar_forms(w: Wdl):
    """The idempotent computed from the multiplication, and from each one-sided formula."""
    A, B = w.A, w.B
    mu = kron(B.mult, A.mult) @ kron(B.id, w.psi, A.id)
    via_mult = mu @ kron(B.id, A.unit, B.unit, A.id)
    return via_mult, kappa_left(A, B, w.psi), kappa_right(A, B, w.psi)


def psibar_report(w: Wdl, pb: Mat | None = None) -> Report:
    """Identities satisfied by the idempotent of a weak distributive law."""
    A, B, psi = w.A, w.B, w.psi
    a, b = A.dim, B.dim
    n = a * b
    via_mult, kl, kr = psibar_forms(w)
    pb = via_mult if pb is None else pb
    mu = kron(B.mult, A.mult) @ kron(B.id, psi, A.id)
    rep = Report("psibar")
    rep.add(compare("left form", "mu (B x eta_A x eta_B x A) == (B x mu_A)(psi x A)(eta_A x B x A)",
                    via_mult, kl, (b, a)))
    rep.add(compare("right form", "mu (B x eta_A x eta_B x A) == (mu_B x A)(B x psi)(B x A x eta_B)",
                    via_mult, kr, (b, a)))
    rep.add(compare("absorbs psi", "psibar psi == psi", pb @ psi, psi, (a, b)))
    rep.add(compare("idempotent", "psibar psibar == psibar", pb @ pb, pb, (b, a)))
    rep.add(compare("left B-linear", "(mu_B x A)(B x psibar) == psibar (mu_B x A)",
                    kron(B.mult, A.id) @ kron(B.id, pb), pb @ kron(B.mult, A.id), (b, b, a)))
    rep.add(compare("right A-linear", "(B x mu_A)(psibar x A) == psibar (B x mu_A)",
                    kron(B.id, A.mult) @ kron(pb, A.id), pb @ kron(B.id, A.mult), (b, a, a)))
    rep.add(compare("mult ignores psibar", "mu (psibar x psibar) == mu",
                    mu @ kron(pb, pb), mu, (b, a, b, a)))
    rep.add(compare("mult lands in image", "psibar mu == mu", pb @ mu, mu, (b, a, b, a)))
    I = identity(n)
    rep.add(compare("associativity", "mu (mu x BA) == mu (BA x mu)",
                    mu @ kron(mu, I), mu @ kron(I, mu), (b, a, b, a, b, a)))
    return rep


def psibar(w: Wdl, verify: bool = True) -> Mat:
    """The canonical idempotent on ``B (x) A``.

    With ``verify`` the three formulas are computed and compared, and the
    standard identities are asserted; otherwise the right-hand formula alone
    is returned.
    """
    if not verify:
        return kappa_right(w.A, w.B, w.psi)
    via_mult, kl, kr = psibar_forms(w)
    if not (via_mult == kl == kr):
        raise InternalInconsistency("the three formulas for psibar disagree; is psi a weak distributive law?")
    psibar_report(w, via_mult).raise_if_failed()
    return via_mult


def certify_wreath(wp: WreathProduct) -> Report:
    w = wp.wdl
    A, B = w.A, w.B
    R = wp.product
    s = wp.splitting
    r = R.dim
    rep = Report("weak wreath product")
    rep.add(compare("split: proj incl", "proj incl == id", s.proj @ s.incl, identity(r), (r,)))
    rep.add(compare("split: incl proj", "incl proj == psibar", s.incl @ s.proj, wp.psibar, (B.dim, A.dim)))
    rep.extend(validate_algebra(R), "product")
    rep.extend(is_algebra_hom(wp.alpha.map, A, R), "alpha")
    rep.extend(is_algebra_hom(wp.beta.map, B, R), "beta")
    rep.add(compare("mult of beta and alpha", "mu_psi (beta x alpha) == proj",
                    R.mult @ kron(wp.beta.map, wp.alpha.map), s.proj, (B.dim, A.dim)))
    M = wp.bimodule()
    rep.add(compare("left action", "mu_psi (beta x R) == proj (mu_B x A)(B x incl)",
                    R.mult @ kron(wp.beta.map, R.id), M.left, (B.dim, r)))
    rep.add(compare("right action", "mu_psi (R x alpha) == proj (B x mu_A)(incl x A)",
                    R.mult @ kron(R.id, wp.alpha.map), M.right, (r, A.dim)))
    outer = outer_bimodule(B, A)
    rep.extend(is_bimodule_map(s.proj, outer, M), "proj")
    rep.extend(is_bimodule_map(s.incl, M, outer), "incl")
    return rep


def weak_wreath(w: Wdl, verify: bool = True) -> WreathProduct:
    """Split psibar and equip the retract with its unital multiplication."""
    check_wdl(w.A, w.B, w.psi).raise_if_failed()
    A, B = w.A, w.B
    pb = psibar(w, verify=verify)
    s = split_idempotent(pb)
    mu = kron(B.mult, A.mult) @ kron(B.id, w.psi, A.id)
    mult = s.proj @ mu @ kron(s.incl, s.incl)
    unit = s.proj @ kron(B.unit, A.unit)
    # the j-th retract basis vector is the class of the j-th pivot tensor of psibar
    labels = []
    for p in rref(pb)[1]:
        i, j = unravel(p, (B.dim, A.dim))
        labels.append(f"[{B.basis[i]}⊗{A.basis[j]}]")
    R = Algebra(mult, unit, tuple(labels), f"{B.name or 'B'}⊗_psi {A.name or 'A'}")
    alpha = AlgebraHom(A, R, s.proj @ kron(B.unit, A.id))
    beta = AlgebraHom(B, R, s.proj @ kron(B.id, A.unit))
    wp = WreathProduct(w, pb, s, R, alpha, beta)
    if verify:
        certify_wreath(wp).raise_if_failed()
    return wp


def strict_wreath(w: Wdl, name: str = "") -> Algebra:
    """``B (x) A`` with ``(mu_B x mu_A)(B x psi x A)`` and unit ``1 (x) 1``, no splitting."""
    A, B = w.A, w.B
    mult = kron(B.mult, A.mult) @ kron(B.id, w.psi, A.id)
    labels = tuple(f"{b}⊗{a}" for b in B.basis for a in A.basis)
    return Algebra(mult, kron(B.unit, A.unit), labels, name or f"{B.name or 'B'}⊗{A.name or 'A'}")
