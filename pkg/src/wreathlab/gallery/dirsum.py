"""
Direct sums of strict distributive laws.

The block law ``a_i (x) b_j -> delta_ij phi_i(a_i (x) b_i)`` on ``(+)A_i`` and
``(+)B_i`` is weak. Its wreath product is the direct sum of the strict wreath
products, and the same law comes out of the Frobenius construction over the
diagonal algebra ``k^n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Algebra, AlgebraHom, direct_sum, direct_sum_maps
from ..cells import check_trivial_onecell
from ..factorization import certify_iso
from ..linalg import Mat, block_diag, block_maps, identity, kron, zeros
from ..report import Report, compare
from ..wdl import Wdl, check_wdl, is_strict, strict_wreath, weak_wreath
from .frobenius import SFLaw, actions, diagonal_frobenius, sf_construct, tensor_over_R


@dataclass(frozen=True, eq=False)
class DirectSum:
    wdl: Wdl
    block_sum: Algebra       # (+)_i B_i (x)_phi_i A_i
    phi_R: Mat               # the law over k^n
    sf: SFLaw                # the same law rebuilt over k^n
    report: Report


def _sum(terms, rows, cols):
    return sum(terms, start=zeros(rows, cols))


def diagonal_units(algebras) -> Mat:
    """``p_i -> 1_i``: the diagonal algebra ``k^n`` into the direct sum of ``algebras``."""
    algebras = list(algebras)
    inj, _ = direct_sum_maps(algebras)
    return _sum((inj[i] @ X.unit @ Mat([[1 if j == i else 0 for j in range(len(algebras))]])
                 for i, X in enumerate(algebras)), inj[0].rows, len(algebras))


def direct_sum_data(laws) -> DirectSum:
    laws = list(laws)
    n = len(laws)
    rep = Report("direct sum of distributive laws")
    for i, w in enumerate(laws):
        rep.extend(check_wdl(w.A, w.B, w.psi), f"summand {i}")
        rep.extend(is_strict(w), f"summand {i}")
    rep.raise_if_failed()

    As, Bs = [w.A for w in laws], [w.B for w in laws]
    A, B = direct_sum(As), direct_sum(Bs)
    inA, prA = direct_sum_maps(As)
    inB, prB = direct_sum_maps(Bs)
    ab, ba = A.dim * B.dim, B.dim * A.dim
    psi = _sum((kron(inB[i], inA[i]) @ w.psi @ kron(prA[i], prB[i]) for i, w in enumerate(laws)), ba, ab)
    w = Wdl(A, B, psi)
    rep.extend(check_wdl(A, B, psi))

    Ws = [strict_wreath(x) for x in laws]
    S = direct_sum(Ws)
    inW, prW = direct_sum_maps(Ws)
    wp = weak_wreath(w)
    J = _sum((kron(inB[i], inA[i]) @ prW[i] for i in range(n)), ba, S.dim)
    P = _sum((inW[i] @ kron(prB[i], prA[i]) for i in range(n)), S.dim, ba)
    rep.extend(certify_iso(wp.proj @ J, P @ wp.incl, S, wp.product), "block iso")

    # over R = k^n: A (x)_R B is the sum of the A_i (x) B_i, and phi is the block sum of the phi_i
    s = diagonal_frobenius(n)
    etaA, etaB = diagonal_units(As), diagonal_units(Bs)
    AB = tensor_over_R(actions(A, etaA)[0], actions(B, etaB)[1], s)
    BA = tensor_over_R(actions(B, etaB)[0], actions(A, etaA)[1], s)
    sumAB = block_maps([x.A.dim * x.B.dim for x in laws])
    sumBA = block_maps([x.B.dim * x.A.dim for x in laws])
    to_AB = AB.proj @ _sum((kron(inA[i], inB[i]) @ sumAB[1][i] for i in range(n)), ab, AB.dim)
    from_AB = _sum((sumAB[0][i] @ kron(prA[i], prB[i]) for i in range(n)), to_AB.cols, ab) @ AB.incl
    to_BA = BA.proj @ _sum((kron(inB[i], inA[i]) @ sumBA[1][i] for i in range(n)), ba, BA.dim)
    from_BA = _sum((sumBA[0][i] @ kron(prB[i], prA[i]) for i in range(n)), to_BA.cols, ba) @ BA.incl
    for name, f, g in (("A (x)_R B", to_AB, from_AB), ("B (x)_R A", to_BA, from_BA)):
        rep.add(compare(f"{name} is the block sum", "from to == id", g @ f, identity(f.cols)))
        rep.add(compare(f"block sum is {name}", "to from == id", f @ g, identity(f.rows)))
    phi_R = to_BA @ block_diag([x.psi for x in laws]) @ from_AB
    sf = sf_construct(A, B, etaA, etaB, phi_R, s)
    rep.extend(sf.report, "over k^n")
    rep.add(compare("same law over k^n", "incl phi_R proj == block law", sf.wdl.psi, psi, (A.dim, B.dim)))
    return DirectSum(w, S, phi_R, sf, rep)


def direct_sum_wdl(laws) -> Wdl:
    d = direct_sum_data(laws)
    d.report.raise_if_failed()
    return d.wdl


def summand_inclusion_report(laws, i: int) -> Report:
    """The inclusions ``A_i -> (+)A``, ``B_i -> (+)B`` as a 1-cell with trivial carrier.

    These maps are multiplicative but not unital, so the unit checks fail;
    the report is informative rather than a certificate.
    """
    laws = list(laws)
    d = direct_sum_data(laws)
    inA, _ = direct_sum_maps([w.A for w in laws])
    inB, _ = direct_sum_maps([w.B for w in laws])
    w = d.wdl
    return check_trivial_onecell(AlgebraHom(laws[i].A, w.A, inA[i]), AlgebraHom(laws[i].B, w.B, inB[i]),
                                 laws[i], w)
