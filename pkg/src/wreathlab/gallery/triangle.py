"""
Upper triangular 2x2 matrices as a weak wreath product of two copies of kZ2.

Basis of T: ``1``, ``a = [[1, 1], [0, -1]]``, ``b = [[-1, 0], [0, 1]]``, with
``a^2 = b^2 = 1``, ``ab = a + b - 1`` and ``ba = -(a + b + 1)``. Tensors in
``kZ2 (x) kZ2`` are ordered ``1(x)1, 1(x)g, g(x)1, g(x)g``.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra import Algebra, cyclic_group_algebra, validate_algebra
from ..factorization import BilinFact, roundtrip_fact, roundtrip_object, validate_fact, wdl_of_fact
from ..linalg import Mat, from_columns
from ..report import Report, compare, fact as fact_check
from ..wdl import Wdl, check_wdl, psibar_report, weak_wreath

Q = Fraction(1, 4)


def triangle_algebra() -> Algebra:
    table = {
        (0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (0, 2): [0, 0, 1],
        (1, 0): [0, 1, 0], (2, 0): [0, 0, 1],
        (1, 1): [1, 0, 0], (2, 2): [1, 0, 0],
        (1, 2): [-1, 1, 1],     # ab = a + b - 1
        (2, 1): [-1, -1, -1],   # ba = -(a + b + 1)
    }
    return Algebra.from_table(["1", "a", "b"], table, [1, 0, 0], "T")


def as_matrices():
    """The basis 1, a, b as explicit 2x2 matrices (used to cross-check the table)."""
    return {
        "1": [[1, 0], [0, 1]],
        "a": [[1, 1], [0, -1]],
        "b": [[-1, 0], [0, 1]],
    }


ALPHA = Mat([[1, 0], [0, 1], [0, 0]])   # g -> a
BETA = Mat([[1, 0], [0, 0], [0, 1]])    # g -> b

PI_TABLE = {
    "1⊗1": [1, 0, 0],
    "1⊗g": [0, 1, 0],
    "g⊗1": [0, 0, 1],
    "g⊗g": [-1, -1, -1],
}

IOTA_TABLE = {
    "1": [3 * Q, -Q, -Q, -Q],
    "a": [-Q, 3 * Q, -Q, -Q],
    "b": [-Q, -Q, 3 * Q, -Q],
}

PSI_TABLE = {
    "1⊗1": [3 * Q, -Q, -Q, -Q],
    "1⊗g": [-Q, -Q, 3 * Q, -Q],
    "g⊗1": [-Q, 3 * Q, -Q, -Q],
    "g⊗g": [-5 * Q, 3 * Q, 3 * Q, -Q],
}

TENSORS = ["1⊗1", "1⊗g", "g⊗1", "g⊗g"]


def triangle_data():
    Z = cyclic_group_algebra(2)
    T = triangle_algebra()
    iota = from_columns([IOTA_TABLE[x] for x in ("1", "a", "b")], 4)
    fact = BilinFact(Z, Z, T, ALPHA, BETA, iota)
    psi = from_columns([PSI_TABLE[t] for t in TENSORS], 4)
    return fact, Wdl(Z, Z, psi)


def triangle_report() -> Report:
    fact, w = triangle_data()
    T = fact.R
    rep = Report("2x2 = 3")
    rep.extend(validate_algebra(T), "T")
    pi_expected = from_columns([PI_TABLE[t] for t in TENSORS], 3)
    rep.add(compare("pi table", "mu_T (beta x alpha) == listed values", fact.pi, pi_expected, (2, 2)))
    rep.extend(validate_fact(fact), "factorization")
    derived = wdl_of_fact(fact, verify=False)
    rep.add(compare("psi table", "iota mu_T (alpha x beta) == listed values", derived.psi, w.psi, (2, 2)))
    rep.extend(check_wdl(w.A, w.B, w.psi), "law")
    rep.extend(psibar_report(w), "psibar")
    wp = weak_wreath(w)
    rep.add(compare("psibar is iota pi", "psibar == iota pi", wp.psibar, fact.iota @ fact.pi, (2, 2)))
    rep.add(fact_check("wreath dimension", "dim of the retract == 3", wp.product.dim, 3))
    rep.extend(roundtrip_object(w), "roundtrip law")
    rep.extend(roundtrip_fact(fact), "roundtrip factorization")
    return rep


def triangle_fixture():
    """``(BilinFact, Wdl)`` with every listed value certified."""
    triangle_report().raise_if_failed()
    return triangle_data()
