"""
Weak laws obtained by extending a strict law on a corner ``eA``, and the
refinement of a factorization through the images of ``alpha`` and ``beta``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Algebra, AlgebraHom, image_subalgebra
from ..cells import WdlOneCell, hom_cell, identity_cell
from ..errors import BadIdempotent
from ..factorization import BilinFact, fact_of_wdl, roundtrip_fact, validate_fact, wdl_of_fact
from ..linalg import Mat, kron, vector
from ..report import Report, compare
from ..wdl import Wdl, check_wdl, flip_law, is_strict, strict_wreath, weak_wreath


@dataclass(frozen=True, eq=False)
class EExtension:
    wdl: Wdl
    corner: Algebra          # eA with unit e
    incl: Mat                # eA -> A
    cores: Mat               # A -> eA, a -> ea
    phi: Wdl                 # the strict law on eA and B
    fact: BilinFact          # through the strict wreath product B (x)_phi eA
    report: Report


def check_corner(A: Algebra, e: Mat) -> Report:
    """``ea == eae`` for every basis element ``a``."""
    Le = A.left_mult(e)
    Re = A.right_mult(e)
    return Report("corner idempotent", [
        compare("ea == eae", "e a == e a e", Le, Re @ Le, (A.dim,)),
    ])


def e_extension_data(A: Algebra, e, B: Algebra, Phi: Mat | None = None) -> EExtension:
    e = e if isinstance(e, Mat) else vector(e)
    corner = check_corner(A, e)
    if not corner.ok:
        w = corner.failures()[0].witness
        raise BadIdempotent(f"ea != eae for a = {A.basis[w.index[0]]}: {list(map(str, w.lhs))} vs {list(map(str, w.rhs))}")
    eA, incl, cores = image_subalgebra(AlgebraHom(A, A, A.left_mult(e)), unital=False)
    phi = flip_law(eA, B) if Phi is None else Wdl(eA, B, Phi)
    rep = Report("e-extension")
    rep.extend(corner)
    rep.extend(check_wdl(eA, B, phi.psi), "phi")
    rep.extend(is_strict(phi), "phi")
    rep.raise_if_failed()

    psi = kron(B.id, incl) @ phi.psi @ kron(cores, B.id)
    w = Wdl(A, B, psi)
    rep.extend(check_wdl(A, B, psi))

    R = strict_wreath(phi, f"{B.name or 'B'}⊗_phi e{A.name or 'A'}")
    alpha = kron(B.unit, cores)
    beta = kron(B.id, eA.unit)
    fact = BilinFact(A, B, R, alpha, beta, kron(B.id, incl))
    rep.extend(validate_fact(fact), "factorization")
    rep.add(compare("psi from the factorization", "iota mu (alpha x beta) == (B x incl) phi (e- x B)",
                    wdl_of_fact(fact, verify=False).psi, psi, (A.dim, B.dim)))
    rep.extend(roundtrip_fact(fact), "wreath vs strict wreath")
    return EExtension(w, eA, incl, cores, phi, fact, rep)


def e_extension(A: Algebra, e, B: Algebra, Phi: Mat | None = None) -> Wdl:
    """``psi(a (x) b) = phi(ea (x) b)``; with ``Phi`` omitted, ``b (x) ea``."""
    d = e_extension_data(A, e, B, Phi)
    d.report.raise_if_failed()
    return d.wdl


def corner_cell(d: EExtension) -> WdlOneCell:
    """The 1-cell ``(a -> ea, id_B)`` from the extended law down to the strict law on ``eA``."""
    return WdlOneCell(d.wdl, d.phi, hom_cell(AlgebraHom(d.wdl.A, d.corner, d.cores)), identity_cell(d.wdl.B))


@dataclass(frozen=True, eq=False)
class Refinement:
    wdl: Wdl                 # the refined law on A~ and B~
    fact: BilinFact          # A~ -> B (x)_psi A <- B~
    A_cores: Mat             # A -> A~
    B_cores: Mat             # B -> B~
    strict: bool
    diagrams: Report         # evaluated, not asserted
    report: Report


def subalgebra_diagrams(w: Wdl) -> Report:
    """The two diagrams equivalent to strictness of the refined law."""
    A, B, psi = w.A, w.B, w.psi
    spread = kron(psi, psi) @ kron(A.unit, B.id, A.id, B.unit)
    rep = Report("refinement strictness")
    rep.add(compare("on A", "psi^2 (eta x BA x eta) psi (A x eta) == psi^2 (eta x BA x eta)(eta x A)",
                    spread @ psi @ kron(A.id, B.unit), spread @ kron(B.unit, A.id), (A.dim,)))
    rep.add(compare("on B", "psi^2 (eta x BA x eta) psi (eta x B) == psi^2 (eta x BA x eta)(B x eta)",
                    spread @ psi @ kron(A.unit, B.id), spread @ kron(B.id, A.unit), (B.dim,)))
    return rep


def subalgebra_refinement(w: Wdl) -> Refinement:
    check_wdl(w.A, w.B, w.psi).raise_if_failed()
    wp = weak_wreath(w)
    f = fact_of_wdl(w)
    At, a_incl, a_cores = image_subalgebra(wp.alpha)
    Bt, b_incl, b_cores = image_subalgebra(wp.beta)
    At = Algebra(At.mult, At.unit, At.basis, f"~{w.A.name or 'A'}")
    Bt = Algebra(Bt.mult, Bt.unit, Bt.basis, f"~{w.B.name or 'B'}")
    refined = BilinFact(At, Bt, wp.product, a_incl, b_incl, kron(b_cores, a_cores) @ f.iota)
    rep = Report("subalgebra refinement")
    rep.extend(validate_fact(refined), "factorization")
    wt = wdl_of_fact(refined, verify=False)
    rep.extend(check_wdl(At, Bt, wt.psi), "refined law")
    strict = is_strict(wt)
    diagrams = subalgebra_diagrams(w)
    rep.add(compare("diagrams decide strictness", "both diagrams hold <=> refined law strict",
                    Mat([[int(diagrams.ok)]]), Mat([[int(strict.ok)]])))
    return Refinement(wt, refined, a_cores, b_cores, strict.ok, diagrams, rep)
