"""
Bilinear factorizations ``alpha: A -> R <- B: beta`` with a bimodule section
``iota`` of ``pi = mu_R (beta x alpha)``, and the passage to and from weak
distributive laws.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    AlgebraHom,
    Bimodule,
    induced_bimodule,
    is_algebra_hom,
    is_bimodule_map,
    outer_bimodule,
)
from .errors import DimensionMismatch
from .linalg import Mat, identity, kron
from .report import Report, compare
from .wdl import Wdl, check_wdl, kappa_left, weak_wreath


@dataclass(frozen=True, eq=False)
class BilinFact:
    """A bilinear factorization structure; ``pi`` is derived, never stored."""

    A: Algebra
    B: Algebra
    R: Algebra
    alpha: Mat
    beta: Mat
    iota: Mat

    def __post_init__(self):
        a, b, r = self.A.dim, self.B.dim, self.R.dim
        if self.alpha.shape != (r, a) or self.beta.shape != (r, b):
            raise DimensionMismatch("alpha/beta shapes do not match A, B, R")
        if self.iota.shape != (b * a, r):
            raise DimensionMismatch(f"iota must be {b * a}x{r}, got {self.iota.shape}")

    @property
    def pi(self) -> Mat:
        return pi_of(self)

    @property
    def alpha_hom(self) -> AlgebraHom:
        return AlgebraHom(self.A, self.R, self.alpha)

    @property
    def beta_hom(self) -> AlgebraHom:
        return AlgebraHom(self.B, self.R, self.beta)

    def bimodule(self) -> Bimodule:
        return induced_bimodule(self.R, self.alpha_hom, self.beta_hom)


def pi_of(f: BilinFact) -> Mat:
    return f.R.mult @ kron(f.beta, f.alpha)


def validate_fact(f: BilinFact) -> Report:
    A, B, R = f.A, f.B, f.R
    rep = Report("bilinear factorization")
    rep.extend(is_algebra_hom(f.alpha, A, R), "alpha")
    rep.extend(is_algebra_hom(f.beta, B, R), "beta")
    pi = pi_of(f)
    rep.add(compare("section", "pi iota == id_R", pi @ f.iota, identity(R.dim), (R.dim,)))
    outer = outer_bimodule(B, A)
    M = f.bimodule()
    rep.extend(is_bimodule_map(pi, outer, M), "pi")
    rep.extend(is_bimodule_map(f.iota, M, outer), "iota")
    return rep


def wdl_of_fact(f: BilinFact, verify: bool = True) -> Wdl:
    """``psi = iota mu_R (alpha x beta)``."""
    if verify:
        validate_fact(f).raise_if_failed()
    psi = f.iota @ f.R.mult @ kron(f.alpha, f.beta)
    w = Wdl(f.A, f.B, psi)
    if verify:
        fact_to_wdl_report(f, w).raise_if_failed()
    return w


def fact_to_wdl_report(f: BilinFact, w: Wdl) -> Report:
    A, B = f.A, f.B
    pi = pi_of(f)
    rep = Report("law of a factorization")
    rep.extend(check_wdl(A, B, w.psi))
    rep.add(compare("idempotent splits through R", "(B x mu_A)(psi x A)(eta_A x B x A) == iota pi",
                    kappa_left(A, B, w.psi), f.iota @ pi, (B.dim, A.dim)))
    rep.add(compare("pi and iota multiplicative", "iota mu_R (pi x pi) == (mu_B x mu_A)(B x psi x A)",
                    f.iota @ f.R.mult @ kron(pi, pi),
                    kron(B.mult, A.mult) @ kron(B.id, w.psi, A.id), (B.dim, A.dim, B.dim, A.dim)))
    mu = kron(B.mult, A.mult) @ kron(B.id, w.psi, A.id)
    rep.add(compare("pi multiplicative", "pi mu == mu_R (pi x pi)",
                    pi @ mu, f.R.mult @ kron(pi, pi), (B.dim, A.dim, B.dim, A.dim)))
    rep.add(compare("iota multiplicative", "iota mu_R == mu (iota x iota)",
                    f.iota @ f.R.mult, mu @ kron(f.iota, f.iota), (f.R.dim, f.R.dim)))
    return rep


def fact_of_wdl(w: Wdl, verify: bool = True) -> BilinFact:
    """The factorization of the weak wreath product through its alpha, beta and incl."""
    wp = weak_wreath(w, verify=verify)
    f = BilinFact(w.A, w.B, wp.product, wp.alpha.map, wp.beta.map, wp.incl)
    if verify:
        validate_fact(f).raise_if_failed()
        Report("pi of the wreath", [compare("pi is proj", "mu_psi (beta x alpha) == proj",
                                            pi_of(f), wp.proj, (w.B.dim, w.A.dim))]).raise_if_failed()
    return f


def roundtrip_object(w: Wdl) -> Report:
    w2 = wdl_of_fact(fact_of_wdl(w))
    rep = Report("law -> factorization -> law")
    rep.add(compare("psi recovered", "psi of the wreath factorization == psi",
                    w2.psi, w.psi, (w.A.dim, w.B.dim)))
    return rep


def certify_iso(phi: Mat, chi: Mat, X: Algebra, Y: Algebra, name="iso") -> Report:
    """``phi: X -> Y`` and ``chi: Y -> X`` are mutually inverse unital algebra maps."""
    rep = Report(name)
    rep.add(compare("chi phi", "chi phi == id_X", chi @ phi, identity(X.dim), (X.dim,)))
    rep.add(compare("phi chi", "phi chi == id_Y", phi @ chi, identity(Y.dim), (Y.dim,)))
    rep.extend(is_algebra_hom(phi, X, Y), "phi")
    rep.extend(is_algebra_hom(chi, Y, X), "chi")
    return rep


def roundtrip_maps(f: BilinFact):
    """``(proj_psi iota: R -> wreath, pi incl_psi: wreath -> R, wreath)``."""
    w = wdl_of_fact(f)
    wp = weak_wreath(w)
    return wp.proj @ f.iota, pi_of(f) @ wp.incl, wp


def roundtrip_fact(f: BilinFact) -> Report:
    phi, chi, wp = roundtrip_maps(f)
    return certify_iso(phi, chi, f.R, wp.product, "factorization -> law -> factorization")
