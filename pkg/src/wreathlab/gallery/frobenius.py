"""
Distributive laws over a separable Frobenius algebra ``R``.

For such ``R`` the quotient ``M (x)_k N -> M (x)_R N`` splits naturally by
``m (x) n -> sum_i m e_i (x) f_i n``. A distributive law ``A (x)_R B -> B (x)_R A``
therefore lifts to a weak distributive law over the ground field whose
idempotent is exactly that splitting.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Algebra, diagonal_algebra, is_algebra_hom, validate_algebra
from ..errors import DimensionMismatch, IllDefinedSection
from ..factorization import certify_iso
from ..linalg import Mat, column_basis, hstack, identity, kron, solve, zeros
from ..report import Report, compare, fact
from ..wdl import Wdl, check_wdl, psibar, weak_wreath


@dataclass(frozen=True, eq=False)
class FrobeniusStructure:
    R: Algebra
    functional: Mat      # 1 x r
    element: Mat         # sum_i e_i (x) f_i as an r^2 x 1 column

    def __post_init__(self):
        r = self.R.dim
        if self.functional.shape != (1, r) or self.element.shape != (r * r, 1):
            raise DimensionMismatch("functional must be 1 x r and the basis element r^2 x 1")

    @classmethod
    def from_pairs(cls, R: Algebra, functional: Mat, pairs):
        t = zeros(R.dim ** 2, 1)
        for e, f in pairs:
            t = t + kron(e, f)
        return cls(R, functional, t)


def validate_frobenius(s: FrobeniusStructure) -> Report:
    R, psi, t = s.R, s.functional, s.element
    I = R.id
    rep = Report("separable Frobenius structure")
    rep.add(compare("left dual basis", "sum_i psi(r e_i) f_i == r",
                    kron(psi, I) @ kron(R.mult, I) @ kron(I, t), I, (R.dim,)))
    rep.add(compare("right dual basis", "sum_i e_i psi(f_i r) == r",
                    kron(I, psi) @ kron(I, R.mult) @ kron(t, I), I, (R.dim,)))
    rep.add(compare("separable", "sum_i e_i f_i == 1", R.mult @ t, R.unit, (1,)))
    return rep


def check_right_module(R: Algebra, act: Mat) -> Report:
    m = act.rows
    Im = identity(m)
    return Report("right module", [
        compare("associative", "(m r) r' == m (r r')",
                act @ kron(act, R.id), act @ kron(Im, R.mult), (m, R.dim, R.dim)),
        compare("unital", "m 1 == m", act @ kron(Im, R.unit), Im, (m,)),
    ])


def check_left_module(R: Algebra, act: Mat) -> Report:
    n = act.rows
    In = identity(n)
    return Report("left module", [
        compare("associative", "r (r' n) == (r r') n",
                act @ kron(R.id, act), act @ kron(R.mult, In), (R.dim, R.dim, n)),
        compare("unital", "1 n == n", act @ kron(R.unit, In), In, (n,)),
    ])


@dataclass(frozen=True, eq=False)
class RTensor:
    """``M (x)_R N`` as a quotient of ``M (x) N`` with its Frobenius section."""

    dim: int
    proj: Mat
    incl: Mat
    relations: Mat

    @property
    def idempotent(self) -> Mat:
        return self.incl @ self.proj


def tensor_over_R(right: Mat, left: Mat, s: FrobeniusStructure) -> RTensor:
    """``right``: the action ``M (x) R -> M``; ``left``: the action ``R (x) N -> N``."""
    R = s.R
    m, n = right.rows, left.rows
    if right.cols != m * R.dim or left.cols != R.dim * n:
        raise DimensionMismatch("module actions do not match R")
    rep = Report("tensor over R")
    rep.extend(check_right_module(R, right), "M")
    rep.extend(check_left_module(R, left), "N")
    rep.extend(validate_frobenius(s))
    rep.raise_if_failed()

    In, Im = identity(n), identity(m)
    rel = kron(right, In) - kron(Im, left)
    span, _ = column_basis(rel)
    k, mn = span.cols, m * n
    # complement the relation span by the first standard vectors independent of it
    _, piv = column_basis(hstack([span, identity(mn)], rows=mn))
    extra = identity(mn).select_cols([p - k for p in piv if p >= k])
    coords = solve(hstack([span, extra], rows=mn), identity(mn))
    proj = coords.select_rows(range(k, mn))

    ibar = kron(right, left) @ kron(Im, s.element, In)
    if not (ibar @ rel).is_zero():
        raise IllDefinedSection("the Frobenius section does not vanish on the relations")
    incl = ibar @ extra
    q = proj.rows
    Report("Frobenius section", [
        compare("section", "proj incl == id", proj @ incl, identity(q), (q,)),
        compare("idempotent", "incl proj == sum_i m e_i (x) f_i n", incl @ proj, ibar, (m, n)),
    ]).raise_if_failed()
    return RTensor(q, proj, incl, rel)


@dataclass(frozen=True, eq=False)
class SFLaw:
    wdl: Wdl
    AB: RTensor
    BA: RTensor
    product: Algebra         # B (x)_R A with the multiplication induced by PhiR
    report: Report


def actions(X: Algebra, eta: Mat):
    """Right and left R-actions on X through ``eta: R -> X``."""
    return X.mult @ kron(X.id, eta), X.mult @ kron(eta, X.id)


def sf_construct(A: Algebra, B: Algebra, etaA: Mat, etaB: Mat, PhiR: Mat, s: FrobeniusStructure) -> SFLaw:
    R = s.R
    rep = Report("law over a separable Frobenius algebra")
    rep.extend(is_algebra_hom(etaA, R, A), "etaA")
    rep.extend(is_algebra_hom(etaB, R, B), "etaB")
    rep.raise_if_failed()
    rA, lA = actions(A, etaA)
    rB, lB = actions(B, etaB)
    AB = tensor_over_R(rA, lB, s)
    BA = tensor_over_R(rB, lA, s)
    if PhiR.shape != (BA.dim, AB.dim):
        raise DimensionMismatch(f"PhiR must be {BA.dim}x{AB.dim}, got {PhiR.shape}")

    psi = BA.incl @ PhiR @ AB.proj
    q = BA.proj
    a, b, r = A.dim, B.dim, R.dim
    IA, IB = A.id, B.id
    # the R-level diagrams, evaluated on lifts and read off in B (x)_R A
    rep.add(compare("R-law multiplicative in A", "Phi (mu_A x B) == (B x mu_A)(Phi x A)(A x Phi)",
                    q @ psi @ kron(A.mult, IB), q @ kron(IB, A.mult) @ kron(psi, IA) @ kron(IA, psi), (a, a, b)))
    rep.add(compare("R-law multiplicative in B", "Phi (A x mu_B) == (mu_B x A)(B x Phi)(Phi x B)",
                    q @ psi @ kron(IA, B.mult), q @ kron(B.mult, IA) @ kron(IB, psi) @ kron(psi, IB), (a, b, b)))
    rep.add(compare("R-law unital in A", "Phi (eta x B) == B x eta",
                    q @ psi @ kron(A.unit, IB), q @ kron(IB, A.unit), (b,)))
    rep.add(compare("R-law unital in B", "Phi (A x eta) == eta x A",
                    q @ psi @ kron(IA, B.unit), q @ kron(B.unit, IA), (a,)))
    rep.add(compare("R-law left R-linear", "Phi (r a (x) b) == r Phi(a (x) b)",
                    q @ psi @ kron(lA, IB), q @ kron(lB, IA) @ kron(identity(r), psi), (r, a, b)))
    rep.add(compare("R-law right R-linear", "Phi (a (x) b r) == Phi(a (x) b) r",
                    q @ psi @ kron(IA, rB), q @ kron(IB, rA) @ kron(psi, identity(r)), (a, b, r)))

    w = Wdl(A, B, psi)
    rep.extend(check_wdl(A, B, psi))
    pb = psibar(w, verify=False)
    rep.add(compare("psibar is the Frobenius idempotent", "psibar == incl proj",
                    pb, BA.idempotent, (b, a)))

    mu = kron(B.mult, A.mult) @ kron(IB, psi, IA)
    product = Algebra(q @ mu @ kron(BA.incl, BA.incl), q @ kron(B.unit, A.unit),
                      tuple(f"t{i}" for i in range(BA.dim)), f"{B.name or 'B'}⊗_R {A.name or 'A'}")
    if rep.ok:
        wp = weak_wreath(w)
        rep.extend(validate_algebra(product), "B (x)_R A")
        rep.add(fact("rank of psibar", "rank psibar == dim B (x)_R A", wp.splitting.rank, BA.dim))
        rep.extend(certify_iso(wp.proj @ BA.incl, q @ wp.incl, product, wp.product), "wreath vs B (x)_R A")
    return SFLaw(w, AB, BA, product, rep)


def sf_weak_dl(A: Algebra, B: Algebra, etaA: Mat, etaB: Mat, PhiR: Mat, s: FrobeniusStructure) -> Wdl:
    """``psi = incl PhiR proj`` over the ground field."""
    out = sf_construct(A, B, etaA, etaB, PhiR, s)
    out.report.raise_if_failed()
    return out.wdl


def diagonal_frobenius(n: int) -> FrobeniusStructure:
    """``k^n`` with ``psi(p_i) = 1`` and basis ``sum_i p_i (x) p_i``."""
    R = diagonal_algebra(n)
    return FrobeniusStructure.from_pairs(R, Mat([[1] * n]), [(R.e(i), R.e(i)) for i in range(n)])
