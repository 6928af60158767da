"""
Weak Ore extensions.

A (p, q)-quasi-derivation ``(sigma, delta)`` on B defines a weak distributive
law ``psi: k[X] (x) B -> B (x) k[X]`` by

    psi(1 (x) b)       = bq X + bp
    psi(X (x) b)       = sigma(b)q X^2 + (sigma(b) + delta(b)q) X + delta(b)p
    psi(X^{n+1} (x) b) = psi(X^n (x) sigma(b)) X + psi(X^n (x) delta(b))

Elements of ``B (x) k[X]`` are :class:`OrePoly` values ``sum_n b_n X^n`` with
coefficients on the left. k[X] is never truncated; every check runs over all
basis inputs up to a degree bound.

Internally a polynomial is an object array of shape ``(length, dim B)`` whose
row ``n`` is the coefficient of ``X^n``, and ``psi(X^n (x) -)`` is stored as an
array ``T`` of shape ``(n + 2, dim B, dim B)`` with ``psi(X^n (x) x) = T @ x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy

from .algebra import Algebra, cyclic_group_algebra, matrix_units_algebra
from .errors import DimensionMismatch, NoSolution
from .linalg import ZERO, Mat, column_basis, from_columns, hstack, identity, kron, rank, scalar, solve, vector, zeros
from .report import Report, compare, fact


@dataclass(frozen=True, eq=False)
class PQQuasiDerivation:
    B: Algebra
    p: Mat
    q: Mat
    sigma: Mat
    delta: Mat
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        b = self.B.dim
        if self.p.shape != (b, 1) or self.q.shape != (b, 1):
            raise DimensionMismatch(f"p and q must be vectors of length {b}")
        if self.sigma.shape != (b, b) or self.delta.shape != (b, b):
            raise DimensionMismatch(f"sigma and delta must be {b}x{b}")

    @property
    def dim(self) -> int:
        return self.B.dim

    def to_json(self) -> dict:
        return {
            "B": self.B.to_json(),
            "p": [str(x) for x in self.p.column(0)],
            "q": [str(x) for x in self.q.column(0)],
            "sigma": self.sigma.to_json(),
            "delta": self.delta.to_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> "PQQuasiDerivation":
        return cls(Algebra.from_json(d["B"]), vector(d["p"]), vector(d["q"]),
                   Mat.from_json(d["sigma"]), Mat.from_json(d["delta"]))


def is_classical(d: PQQuasiDerivation) -> bool:
    """``(p, q) = (1, 0)``: an ordinary quasi-derivation."""
    return d.p == d.B.unit and d.q.is_zero()


def validate_pqqd(d: PQQuasiDerivation) -> Report:
    B, p, q, s, t = d.B, d.p, d.q, d.sigma, d.delta
    n = B.dim
    I = B.id
    Lp, Rp = B.left_mult(p), B.right_mult(p)
    rep = Report("(p, q)-quasi-derivation")
    rep.add(compare("p idempotent", "p p == p", B.mul(p, p), p))
    rep.add(compare("q square zero", "q q == 0", B.mul(q, q), zeros(n, 1)))
    rep.add(compare("pq", "p q == q", B.mul(p, q), q))
    rep.add(compare("qp", "q p == 0", B.mul(q, p), zeros(n, 1)))
    rep.add(compare("p absorbs", "p b p == b p", Lp @ Rp, Rp, (n,)))
    rep.add(compare("sigma multiplicative", "sigma(b b') == sigma(b) sigma(b')",
                    s @ B.mult, B.mult @ kron(s, s), (n, n)))
    rep.add(compare("sigma(1)", "sigma(1) == p", s @ B.unit, p))
    rep.add(compare("sigma(p)", "sigma(p) == p", s @ p, p))
    rep.add(compare("sigma(q)", "sigma(q) == 0", s @ q, zeros(n, 1)))
    rep.add(compare("delta twisted Leibniz", "delta(b b') == sigma(b) delta(b') + delta(b) b' p",
                    t @ B.mult, B.mult @ kron(s, t) + Rp @ B.mult @ kron(t, I), (n, n)))
    rep.add(compare("delta(1)", "delta(1) == q", t @ B.unit, q))
    rep.add(compare("delta(p)", "delta(p) == q", t @ p, q))
    rep.add(compare("delta(q)", "delta(q) == 0", t @ q, zeros(n, 1)))
    return rep


# -- polynomials -------------------------------------------------------------------------


def _trim(P):
    k = P.shape[0]
    while k and not P[k - 1].astype(bool).any():
        k -= 1
    return P[:k]


def _zero_poly(b, length=0):
    P = numpy.empty((length, b), dtype=object)
    P[...] = ZERO
    return P


def _add(P, Q):
    L = max(P.shape[0], Q.shape[0])
    out = _zero_poly(P.shape[1], L)
    out[: P.shape[0]] += P
    out[: Q.shape[0]] += Q
    return out


def _shift(P, k=1):
    """``P X^k``."""
    return numpy.concatenate([_zero_poly(P.shape[1], k), P]) if len(P) else P


@dataclass(frozen=True)
class OrePoly:
    """``sum_n coeffs[n] X^n`` in ``B (x) k[X]``; trailing zero coefficients trimmed."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        rows = [tuple(scalar(x) for x in c) for c in self.coeffs]
        if any(len(r) != self.dim for r in rows):
            raise DimensionMismatch(f"coefficients must have length {self.dim}")
        while rows and not any(rows[-1]):
            rows.pop()
        object.__setattr__(self, "coeffs", tuple(rows))

    @classmethod
    def _of(cls, P, dim):
        return cls(dim, tuple(tuple(r) for r in _trim(P)))

    @classmethod
    def monomial(cls, b, n: int, dim: int | None = None) -> "OrePoly":
        b = list(b.column(0)) if isinstance(b, Mat) else list(b)
        return cls(len(b) if dim is None else dim, tuple([ZERO] * len(b) for _ in range(n)) + (tuple(b),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Mat:
        if n < len(self.coeffs):
            return vector(self.coeffs[n])
        return zeros(self.dim, 1)

    def array(self):
        P = _zero_poly(self.dim, len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            P[i] = c
        return P

    def __add__(self, other: "OrePoly") -> "OrePoly":
        return OrePoly._of(_add(self.array(), other.array()), self.dim)

    def to_json(self):
        return [[str(x) for x in c] for c in self.coeffs]

    @classmethod
    def from_json(cls, d, dim: int) -> "OrePoly":
        return cls(dim, tuple(tuple(c) for c in d))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for n, c in enumerate(self.coeffs):
            if any(c):
                mono = "" if n == 0 else ("X" if n == 1 else f"X^{n}")
                terms.append(f"({', '.join(map(str, c))}){mono}")
        return " + ".join(terms)


# -- the law -----------------------------------------------------------------------------


def _mats(d: PQQuasiDerivation):
    c = d._cache
    if "mats" not in c:
        B = d.B
        c["mats"] = {
            "S": d.sigma.array(),
            "D": d.delta.array(),
            "Rp": B.right_mult(d.p).array(),
            "Rq": B.right_mult(d.q).array(),
            "L": [B.left_mult(B.e(i)).array() for i in range(B.dim)],
            "unit": numpy.array(B.unit.column(0), dtype=object),
        }
    return c["mats"]


def psi_table(d: PQQuasiDerivation, n: int):
    """Array ``T`` of shape ``(n + 2, b, b)`` with ``psi(X^n (x) x) = T @ x`` row by row."""
    tables = d._cache.setdefault("psi", [])
    m = _mats(d)
    S, D, Rp, Rq = m["S"], m["D"], m["Rp"], m["Rq"]
    if not tables:
        tables.append(numpy.stack([Rp, Rq]))
        tables.append(numpy.stack([Rp @ D, S + Rq @ D, Rq @ S]))
    while len(tables) <= n:
        T = tables[-1]
        nxt = numpy.empty((T.shape[0] + 1,) + T.shape[1:], dtype=object)
        nxt[...] = ZERO
        nxt[1:] += T @ S          # psi(X^k (x) sigma(b)) X
        nxt[:-1] += T @ D         # psi(X^k (x) delta(b))
        tables.append(nxt)
    return tables[n]


def _psi(d, n, x):
    """``psi(X^n (x) x)`` for a coefficient array ``x`` of length b."""
    return _trim(psi_table(d, n) @ x)


def _as_array(b, dim):
    if isinstance(b, Mat):
        return numpy.array(b.column(0), dtype=object)
    return numpy.array([scalar(v) for v in b], dtype=object).reshape(dim)


def ore_psi(d: PQQuasiDerivation, n: int, b) -> OrePoly:
    """``psi(X^n (x) b)`` as an element of ``B (x) k[X]``."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    P = _psi(d, n, _as_array(b, d.dim))
    out = OrePoly._of(P, d.dim)
    assert out.degree <= n + 1, "degree bound violated"
    return out


def _lmul(d, x, P):
    """``x P``: left multiply every coefficient by ``x``."""
    Lx = sum((xi * Li for xi, Li in zip(x, _mats(d)["L"]) if xi), start=_zero_poly(d.dim, d.dim))
    return P @ Lx.T if len(P) else P


def _mult(d, F, G):
    """``(b' X^m)(b X^n) = b' psi(X^m (x) b) X^n``, bilinearly."""
    out = _zero_poly(d.dim, 0)
    for m, f in enumerate(F):
        if not f.astype(bool).any():
            continue
        for n, g in enumerate(G):
            if g.astype(bool).any():
                out = _add(out, _shift(_lmul(d, f, _psi(d, m, g)), n))
    return _trim(out)


def ore_wreath_mult(d: PQQuasiDerivation, f: OrePoly, g: OrePoly) -> OrePoly:
    return OrePoly._of(_mult(d, f.array(), g.array()), d.dim)


def _psibar(d, F):
    unit = _mats(d)["unit"]
    out = _zero_poly(d.dim, 0)
    for n, f in enumerate(F):
        if f.astype(bool).any():
            out = _add(out, _lmul(d, f, _psi(d, n, unit)))
    return _trim(out)


def ore_psibar(d: PQQuasiDerivation, f: OrePoly) -> OrePoly:
    """The idempotent ``b X^n -> b psi(X^n (x) 1)``."""
    return OrePoly._of(_psibar(d, f.array()), d.dim)


def ore_unit(d: PQQuasiDerivation) -> OrePoly:
    """``psi(1 (x) 1) = q X + p``, the unit of the weak Ore extension."""
    return ore_psi(d, 0, d.B.unit)


# -- verification ------------------------------------------------------------------------


def _columns(polys, length, b):
    """Stack polynomials as columns of a matrix, padded to ``length`` coefficients."""
    cols = []
    for P in polys:
        flat = _zero_poly(b, length)
        flat[: P.shape[0]] = P
        cols.append(list(flat.ravel()))
    return from_columns(cols, length * b)


def _basis(d):
    return [numpy.array(d.B.e(i).column(0), dtype=object) for i in range(d.dim)]


def _product_vec(d, x, y):
    """``x y`` in B as a coefficient array."""
    return _lmul(d, x, y.reshape(1, -1))[0]


def ore_check_properties(d: PQQuasiDerivation, N: int) -> Report:
    """The four defining properties for all basis ``b, b'`` and ``n, m <= N``."""
    b = d.dim
    E = _basis(d)
    p = numpy.array(d.p.column(0), dtype=object)
    q = numpy.array(d.q.column(0), dtype=object)
    unit = _mats(d)["unit"]
    ns = range(N + 1)
    L = 2 * N + 3
    rep = Report("weak Ore law")

    def add(name, identity, lhs, rhs, dims):
        rep.add(compare(name, identity, _columns(lhs, L, b), _columns(rhs, L, b), dims))

    zero = _zero_poly(b, 0)
    add("absorbs p", "psi(X^n (x) b p) == psi(X^n (x) b)",
        [_psi(d, n, _product_vec(d, e, p)) for n in ns for e in E],
        [_psi(d, n, e) for n in ns for e in E], (N + 1, b))
    add("kills q", "psi(X^n (x) b q) == 0",
        [_psi(d, n, _product_vec(d, e, q)) for n in ns for e in E],
        [zero for n in ns for e in E], (N + 1, b))
    add("weak unit", "b psi(X^n (x) 1) == psi(1 (x) b) X^n",
        [_lmul(d, e, _psi(d, n, unit)) for n in ns for e in E],
        [_shift(_psi(d, 0, e), n) for n in ns for e in E], (N + 1, b))

    def lhs_A(n, m, e):
        out = zero
        for j, c in enumerate(_psi(d, m, e)):
            out = _add(out, _shift(_psi(d, n, c), j))
        return out

    add("multiplicative in k[X]", "(B x mu)(psi x k[X])(k[X] x psi)(X^n X^m b) == psi(X^(n+m) (x) b)",
        [lhs_A(n, m, e) for n in ns for m in ns for e in E],
        [_psi(d, n + m, e) for n in ns for m in ns for e in E], (N + 1, N + 1, b))

    def lhs_B(n, e, f):
        out = zero
        for j, c in enumerate(_psi(d, n, e)):
            out = _add(out, _lmul(d, c, _psi(d, j, f)))
        return out

    add("multiplicative in B", "(mu x k[X])(B x psi)(psi x B)(X^n b b') == psi(X^n (x) b b')",
        [lhs_B(n, e, f) for n in ns for e in E for f in E],
        [_psi(d, n, _product_vec(d, e, f)) for n in ns for e in E for f in E], (N + 1, b, b))

    tails = []
    for n in ns:
        for e in E:
            P = _psi(d, n, e)
            tails.append(P[n + 2:] if P.shape[0] > n + 2 else zero)
    add("degree bound", "coefficients of X^k in psi(X^n (x) b) vanish for k > n + 1",
        tails, [zero] * len(tails), (N + 1, b))
    return rep


def ore_wreath_report(d: PQQuasiDerivation, N: int) -> Report:
    """Idempotent, unit and associativity of the induced multiplication up to degree ``N``."""
    b = d.dim
    E = _basis(d)
    ns = range(N + 1)
    L = 3 * N + 4
    monos = [_shift(e.reshape(1, -1), n) for n in ns for e in E]
    unit = _psi(d, 0, _mats(d)["unit"])
    dims = (N + 1, b)
    rep = Report("weak Ore extension")
    once = [_psibar(d, M) for M in monos]
    rep.add(compare("psibar idempotent", "psibar psibar == psibar",
                    _columns([_psibar(d, P) for P in once], L, b), _columns(once, L, b), dims))
    rep.add(compare("mult lands in image", "psibar (f g) == f g",
                    _columns([_psibar(d, _mult(d, M, unit)) for M in monos], L, b),
                    _columns([_mult(d, M, unit) for M in monos], L, b), dims))
    rep.add(compare("left unit", "psi(1 (x) 1) psibar(f) == psibar(f)",
                    _columns([_mult(d, unit, P) for P in once], L, b), _columns(once, L, b), dims))
    rep.add(compare("right unit", "psibar(f) psi(1 (x) 1) == psibar(f)",
                    _columns([_mult(d, P, unit) for P in once], L, b), _columns(once, L, b), dims))
    lhs, rhs = [], []
    for F in monos:
        for G in monos:
            FG = _mult(d, F, G)
            for H in monos:
                lhs.append(_mult(d, FG, H))
                rhs.append(_mult(d, F, _mult(d, G, H)))
    rep.add(compare("associative", "(f g) h == f (g h)", _columns(lhs, L, b), _columns(rhs, L, b),
                    (N + 1, b, N + 1, b, N + 1, b)))
    return rep


def _outer(P, Q):
    """``P (x) Q`` in ``(B (x) k[X])^(x)2`` as an array ``(len P, b, len Q, b)``."""
    return numpy.einsum("ij,kl->ijkl", P, Q) if len(P) and len(Q) else None


def _spread(d, P):
    """``(psi x psi)(eta x B x k[X] x eta)`` applied to ``P`` in ``B (x) k[X]``."""
    unit = _mats(d)["unit"]
    b = d.dim
    L = P.shape[0] + 3
    out = numpy.empty((3, b, L, b), dtype=object)
    out[...] = ZERO
    for j, c in enumerate(P):
        left = _psi(d, 0, c)
        right = _psi(d, j, unit)
        t = _outer(left, right)
        if t is not None:
            out[: t.shape[0], :, : t.shape[2], :] += t
    return out.ravel()


def ore_strictness_diagrams(d: PQQuasiDerivation, N: int) -> Report:
    """The two refinement-strictness diagrams on monomials up to degree ``N``."""
    b = d.dim
    unit = _mats(d)["unit"]
    E = _basis(d)

    def cols(vecs):
        return from_columns([list(v) for v in vecs], len(vecs[0]))

    L = N + 1
    pad = lambda P: numpy.concatenate([P, _zero_poly(b, L + 2 - P.shape[0])]) if P.shape[0] < L + 2 else P
    rep = Report("weak Ore strictness")
    up = [_spread(d, pad(_psi(d, n, unit))) for n in range(N + 1)]
    down = [_spread(d, pad(_shift(unit.reshape(1, -1), n))) for n in range(N + 1)]
    rep.add(compare("on k[X]", "psi^2 (eta x B k[X] x eta) psi(X^n (x) 1) == psi^2 (eta x B k[X] x eta)(1 (x) X^n)",
                    cols(up), cols(down), (N + 1,)))
    up = [_spread(d, pad(_psi(d, 0, e))) for e in E]
    down = [_spread(d, pad(e.reshape(1, -1))) for e in E]
    rep.add(compare("on B", "psi^2 (eta x B k[X] x eta) psi(1 (x) b) == psi^2 (eta x B k[X] x eta)(b (x) 1)",
                    cols(up), cols(down), (b,)))
    return rep


def ore_tilde_basis(d: PQQuasiDerivation, N: int):
    """``(generators of B~, [psi(X^n (x) 1) for n <= N])``.

    ``B~`` is spanned by ``b (q X + p)``; the generators returned are a basis
    of that span chosen among the images of the basis of B.
    """
    gens, powers, _ = _tilde(d, N)
    return [OrePoly._of(G, d.dim) for G in gens], [OrePoly._of(P, d.dim) for P in powers]


def _tilde(d, N):
    b = d.dim
    unit = _mats(d)["unit"]
    u = _psi(d, 0, unit)
    images = [_lmul(d, e, u) for e in _basis(d)]
    L = N + 3
    M = _columns(images, L, b)
    _, piv = column_basis(M)
    gens = [images[j] for j in piv]
    powers = [_psi(d, n, unit) for n in range(N + 1)]
    return gens, powers, L


def ore_tilde_report(d: PQQuasiDerivation, N: int) -> Report:
    """The Ore-extension characterization of the weak Ore extension over ``B~``, up to ``N``."""
    b = d.dim
    gens, powers, _ = _tilde(d, N)
    L = 2 * N + 4
    X = powers[1] if len(powers) > 1 else _psi(d, 1, _mats(d)["unit"])
    rep = Report("Ore extension of B~")
    unit = powers[0]
    span = _columns(gens, L, b)
    closure = [_mult(d, g, h) for g in gens for h in gens]
    rep.add(compare("B~ closed", "B~ B~ inside B~",
                    _columns(closure, L, b), span @ _coords(span, _columns(closure, L, b)),
                    (len(gens), len(gens))))
    rep.add(compare("B~ unital", "psi(1 (x) 1) in B~",
                    _columns([unit], L, b), span @ _coords(span, _columns([unit], L, b))))
    pw = [unit]
    for _ in range(1, N + 1):
        pw.append(_mult(d, pw[-1], X))
    rep.add(compare("powers", "psi(X (x) 1)^n == psi(X^n (x) 1)",
                    _columns(pw, L, b), _columns(powers, L, b), (N + 1,)))
    products = [_mult(d, g, P) for P in powers for g in gens]
    prod_mat = _columns(products, L, b)
    r = rank(prod_mat)
    rep.add(fact("powers independent over B~", "rank {b~ X~^n} == dim B~ (N + 1)",
                 r, len(gens) * (N + 1)))
    image = _columns([_psibar(d, _shift(e.reshape(1, -1), n)) for n in range(N + 1) for e in _basis(d)], L, b)
    rep.add(fact("powers span", "span {b~ X~^n} == psibar(B (x) k[X]) up to degree N",
                 rank(hstack([prod_mat, image], rows=prod_mat.rows)), r))
    rep.add(fact("image is spanned", "rank psibar(B (x) k[X]) == rank {b~ X~^n}", rank(image), r))
    lin = [_mult(d, g, X) for g in gens] + gens
    lin_mat = _columns(lin, L, b)
    XB = _columns([_mult(d, X, g) for g in gens], L, b)
    rep.add(compare("X B~ inside B~ X + B~", "X~ b~ in span {b~ X~, b~}",
                    XB, lin_mat @ _coords(lin_mat, XB), (len(gens),)))
    return rep


def _coords(span: Mat, targets: Mat) -> Mat:
    """Coordinates of each target in ``span``; zero where the target is outside it."""
    cols = []
    for j in range(targets.cols):
        try:
            cols.append(solve(span, targets.col(j)).column(0))
        except NoSolution:
            cols.append([ZERO] * span.cols)
    return from_columns(cols, span.cols)


# -- fixtures ----------------------------------------------------------------------------


def triangular_pqqd() -> PQQuasiDerivation:
    """Upper triangular 2x2 matrices (basis E11, E12, E22) with ``p = E11``, ``q = E12``,
    ``sigma`` the corner projection and ``delta`` the shift to the corner."""
    B = matrix_units_algebra([(0, 0), (0, 1), (1, 1)], 2, "T")
    sigma = Mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    delta = Mat([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    return PQQuasiDerivation(B, vector([1, 0, 0]), vector([0, 1, 0]), sigma, delta)


def classical_pqqd(B: Algebra | None = None) -> PQQuasiDerivation:
    """``(p, q) = (1, 0)``, ``sigma = id``, ``delta = 0``: ordinary polynomials over B."""
    B = cyclic_group_algebra(2) if B is None else B
    return PQQuasiDerivation(B, B.unit, zeros(B.dim, 1), identity(B.dim), zeros(B.dim, B.dim))


def broken_delta_pqqd() -> PQQuasiDerivation:
    """The triangular example with ``delta(q) = E11`` instead of 0."""
    d = triangular_pqqd()
    delta = Mat([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    return PQQuasiDerivation(d.B, d.p, d.q, d.sigma, delta)
