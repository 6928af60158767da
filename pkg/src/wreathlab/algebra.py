"""
Finite-dimensional unital associative algebras over the rationals.

An :class:`Algebra` stores its multiplication as a single ``dim x dim**2``
matrix (the linear map ``A (x) A -> A``) and its unit as a ``dim x 1`` column,
so every axiom is an equality of composites built with :func:`kron`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, NoSolution
from .linalg import (
    ONE,
    ZERO,
    Mat,
    basis_vector,
    block_maps,
    column_basis,
    hstack,
    identity,
    kron,
    permute_domain,
    scalar,
    solve,
    swap,
    vector,
    zeros,
)
from .report import Report, compare


@dataclass(frozen=True, eq=False)
class Algebra:
    mult: Mat
    unit: Mat
    basis: tuple = ()
    name: str = ""

    def __post_init__(self):
        d = self.mult.rows
        if self.mult.cols != d * d:
            raise DimensionMismatch(f"multiplication must be {d}x{d * d}, got {self.mult.shape}")
        if self.unit.shape != (d, 1):
            raise DimensionMismatch(f"unit must be {d}x1, got {self.unit.shape}")
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(d)))
        elif len(self.basis) != d:
            raise DimensionMismatch(f"{len(self.basis)} basis labels for dimension {d}")
        object.__setattr__(self, "basis", tuple(self.basis))

    @property
    def dim(self) -> int:
        return self.mult.rows

    @property
    def id(self) -> Mat:
        return identity(self.dim)

    def e(self, i: int) -> Mat:
        return basis_vector(self.dim, i)

    def elem(self, coeffs) -> Mat:
        coeffs = list(coeffs)
        if len(coeffs) != self.dim:
            raise DimensionMismatch(f"{len(coeffs)} coordinates for dimension {self.dim}")
        return vector(coeffs)

    def mul(self, x: Mat, y: Mat) -> Mat:
        return self.mult @ kron(x, y)

    def left_mult(self, x: Mat) -> Mat:
        """The map ``y -> x y``."""
        return self.mult @ kron(x, self.id)

    def right_mult(self, x: Mat) -> Mat:
        """The map ``y -> y x``."""
        return self.mult @ kron(self.id, x)

    def opposite(self) -> "Algebra":
        return Algebra(self.mult @ swap(self.dim, self.dim), self.unit, self.basis, f"{self.name}^op")

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.mult == other.mult and self.unit == other.unit

    def __hash__(self):
        return hash((self.mult, self.unit))

    def __repr__(self):
        return f"Algebra({self.name or 'unnamed'}, dim={self.dim}, basis={list(self.basis)})"

    def to_json(self) -> dict:
        d = self.dim
        triples = []
        for k, col in self.mult.nonzero():
            i, j = divmod(col, d)
            triples.append([i, j, k, str(self.mult[k, col])])
        triples.sort()
        return {
            "dim": d,
            "basis": list(self.basis),
            "unit": [str(x) for x in self.unit.column(0)],
            "mult": triples,
        }

    @classmethod
    def from_structure_constants(cls, dim, triples, unit, basis=(), name=""):
        """``triples`` lists ``(i, j, k, c)``: ``e_i e_j`` has coefficient c on ``e_k``."""
        a = zeros(dim, dim * dim).array()
        for i, j, k, c in triples:
            a[k, i * dim + j] += scalar(c)
        return cls(Mat(a), vector(unit), tuple(basis), name)

    @classmethod
    def from_table(cls, basis, table, unit, name=""):
        """``table[(i, j)]`` is the coordinate list of ``e_i e_j``; missing pairs are zero."""
        d = len(basis)
        cols = []
        for i in range(d):
            for j in range(d):
                cols.append(table.get((i, j), [0] * d))
        return cls(hstack([vector(c) for c in cols], d) if cols else zeros(d, 0), vector(unit), tuple(basis), name)

    @classmethod
    def from_json(cls, d: dict, name="") -> "Algebra":
        return cls.from_structure_constants(d["dim"], d["mult"], d["unit"], d.get("basis", ()), name)


@dataclass(frozen=True, eq=False)
class AlgebraHom:
    src: Algebra
    dst: Algebra
    map: Mat

    def __post_init__(self):
        if self.map.shape != (self.dst.dim, self.src.dim):
            raise DimensionMismatch(
                f"hom map must be {self.dst.dim}x{self.src.dim}, got {self.map.shape}"
            )

    def check(self, unital=True) -> Report:
        return is_algebra_hom(self.map, self.src, self.dst, unital=unital)


@dataclass(frozen=True, eq=False)
class Bimodule:
    """A ``B``-``A`` bimodule: left action ``B (x) N -> N``, right action ``N (x) A -> N``."""

    B: Algebra
    A: Algebra
    left: Mat
    right: Mat
    dim: int = field(default=-1)

    def __post_init__(self):
        n = self.left.rows
        if self.dim == -1:
            object.__setattr__(self, "dim", n)
        if self.left.shape != (n, self.B.dim * n) or self.right.shape != (n, n * self.A.dim):
            raise DimensionMismatch("bimodule action shapes do not match the carrier")


# -- standard algebras --------------------------------------------------------------


def ground_field() -> Algebra:
    return Algebra(identity(1), vector([1]), ("1",), "k")


def cyclic_group_algebra(n: int, gen: str = "g") -> Algebra:
    """k[Z_n] with basis 1, g, ..., g^(n-1)."""
    names = ["1"] + [gen if i == 1 else f"{gen}^{i}" for i in range(1, n)]
    table = {}
    for i in range(n):
        for j in range(n):
            c = [0] * n
            c[(i + j) % n] = 1
            table[(i, j)] = c
    return Algebra.from_table(names, table, [1] + [0] * (n - 1), f"kZ{n}")


def diagonal_algebra(n: int, prefix: str = "p") -> Algebra:
    """k^n with minimal orthogonal idempotents p_i."""
    table = {}
    for i in range(n):
        c = [0] * n
        c[i] = 1
        table[(i, i)] = c
    return Algebra.from_table([f"{prefix}{i + 1}" for i in range(n)], table, [1] * n, f"k^{n}")


def dual_numbers() -> Algebra:
    """k[x]/(x^2)."""
    table = {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]}
    return Algebra.from_table(["1", "x"], table, [1, 0], "k[x]/x^2")


def matrix_units_algebra(units, n: int, name="") -> Algebra:
    """Subalgebra of n x n matrices spanned by the listed matrix units ``(r, c)``.

    The unit is the identity matrix, which must be a sum of listed diagonal units.
    """
    units = list(units)
    pos = {u: i for i, u in enumerate(units)}
    d = len(units)
    table = {}
    for i, (r1, c1) in enumerate(units):
        for j, (r2, c2) in enumerate(units):
            coords = [0] * d
            if c1 == r2:
                if (r1, c2) not in pos:
                    raise ValueError(f"span of {units} is not closed under products")
                coords[pos[(r1, c2)]] = 1
            table[(i, j)] = coords
    unit = [0] * d
    for k in range(n):
        if (k, k) not in pos:
            raise ValueError("identity matrix not in the span")
        unit[pos[(k, k)]] = 1
    names = [f"E{r + 1}{c + 1}" for r, c in units]
    return Algebra.from_table(names, table, unit, name)


# -- validation ------------------------------------------------------------------------


def validate_algebra(A: Algebra) -> Report:
    d = A.dim
    I = A.id
    rep = Report(f"algebra {A.name or ''}".strip())
    rep.add(compare(
        "associativity", "mu (mu x A) == mu (A x mu)",
        A.mult @ kron(A.mult, I), A.mult @ kron(I, A.mult), (d, d, d),
    ))
    rep.add(compare("left unit", "mu (eta x A) == id", A.mult @ kron(A.unit, I), I, (d,)))
    rep.add(compare("right unit", "mu (A x eta) == id", A.mult @ kron(I, A.unit), I, (d,)))
    return rep


def is_algebra_hom(f: Mat, src: Algebra, dst: Algebra, unital: bool = True) -> Report:
    if f.shape != (dst.dim, src.dim):
        raise DimensionMismatch(f"hom map must be {dst.dim}x{src.dim}, got {f.shape}")
    rep = Report("algebra homomorphism")
    rep.add(compare(
        "multiplicative", "f mu_src == mu_dst (f x f)",
        f @ src.mult, dst.mult @ kron(f, f), (src.dim, src.dim),
    ))
    if unital:
        rep.add(compare("unital", "f eta_src == eta_dst", f @ src.unit, dst.unit, (1,)))
    return rep


# -- constructions -----------------------------------------------------------------------


def direct_sum_maps(algebras):
    """Injections and projections of the underlying spaces of a direct sum."""
    return block_maps([A.dim for A in algebras])


def direct_sum(algebras) -> Algebra:
    """Block-diagonal product, unit the sum of summand units, labels prefixed ``"i."``."""
    algebras = list(algebras)
    if not algebras:
        raise ValueError("direct sum of an empty list")
    if len(algebras) == 1:
        return algebras[0]
    inj, proj = direct_sum_maps(algebras)
    mult = sum((i @ A.mult @ kron(p, p) for A, i, p in zip(algebras, inj, proj)), start=zeros(inj[0].rows, inj[0].rows ** 2))
    unit = sum((i @ A.unit for A, i in zip(algebras, inj)), start=zeros(inj[0].rows, 1))
    basis = [f"{n}.{b}" for n, A in enumerate(algebras) for b in A.basis]
    name = " + ".join(A.name or "?" for A in algebras)
    return Algebra(mult, unit, tuple(basis), f"({name})")


def tensor_algebra(*algebras: Algebra) -> Algebra:
    """Factorwise multiplication on ``A_1 (x) ... (x) A_n``."""
    if not algebras:
        return ground_field()
    if len(algebras) == 1:
        return algebras[0]
    dims = [A.dim for A in algebras]
    n = len(dims)
    # (A1..An)(A1..An) -> A1 A1 A2 A2 ...
    order = [x for i in range(n) for x in (i, n + i)]
    mult = permute_domain(kron(*(A.mult for A in algebras)), dims + dims, order)
    unit = kron(*(A.unit for A in algebras))
    basis = [""]
    for A in algebras:
        basis = [f"{x}⊗{y}" if x else y for x in basis for y in A.basis]
    return Algebra(mult, unit, tuple(basis), "⊗".join(A.name or "?" for A in algebras))


def subalgebra(ambient: Algebra, span: Mat, unit: Mat | None = None, name: str = ""):
    """Algebra structure on the column span of ``span`` inside ``ambient``.

    Returns ``(sub, inclusion)``; the basis is the pivot columns of ``span``.
    ``unit`` defaults to the ambient unit and must lie in the span.
    """
    incl, pivots = column_basis(span)
    try:
        mult = solve(incl, ambient.mult @ kron(incl, incl))
    except NoSolution:
        raise ValueError("span is not closed under multiplication") from None
    u = ambient.unit if unit is None else unit
    try:
        u = solve(incl, u)
    except NoSolution:
        raise ValueError("unit does not lie in the span") from None
    labels = []
    for j in range(incl.cols):
        col = incl.column(j)
        nz = [i for i, x in enumerate(col) if x != ZERO]
        labels.append(ambient.basis[nz[0]] if len(nz) == 1 and col[nz[0]] == ONE else f"s{j}")
    if len(set(labels)) != len(labels):
        labels = [f"s{j}" for j in range(incl.cols)]
    return Algebra(mult, u, tuple(labels), name), incl


def image_subalgebra(f: AlgebraHom, unital: bool = True):
    """Image of a homomorphism as an algebra with unit ``f(1)``.

    Returns ``(image, inclusion, corestriction)`` with
    ``inclusion @ corestriction == f.map``. With ``unital=False`` only
    multiplicativity is required (the ``eA`` case).
    """
    f.check(unital=unital).raise_if_failed()
    image, incl = subalgebra(f.dst, f.map, unit=f.map @ f.src.unit)
    cores = solve(incl, f.map)
    assert incl @ cores == f.map
    return image, incl, cores


# -- bimodules -----------------------------------------------------------------------------


def regular_bimodule(R: Algebra) -> Bimodule:
    return Bimodule(R, R, R.mult, R.mult)


def outer_bimodule(B: Algebra, A: Algebra) -> Bimodule:
    """``B (x) A`` with B acting on the left factor and A on the right factor."""
    return Bimodule(B, A, kron(B.mult, A.id), kron(B.id, A.mult))


def induced_bimodule(R: Algebra, alpha: AlgebraHom, beta: AlgebraHom) -> Bimodule:
    """R as a B-A bimodule through ``beta: B -> R`` and ``alpha: A -> R``."""
    if alpha.dst != R or beta.dst != R:
        raise ValueError("alpha and beta must land in R")
    return Bimodule(beta.src, alpha.src, R.mult @ kron(beta.map, R.id), R.mult @ kron(R.id, alpha.map))


def validate_bimodule(M: Bimodule) -> Report:
    n, b, a = M.dim, M.B.dim, M.A.dim
    In, IB, IA = identity(n), M.B.id, M.A.id
    rep = Report("bimodule")
    rep.add(compare("left associative", "l (mu_B x N) == l (B x l)",
                    M.left @ kron(M.B.mult, In), M.left @ kron(IB, M.left), (b, b, n)))
    rep.add(compare("left unital", "l (eta_B x N) == id", M.left @ kron(M.B.unit, In), In, (n,)))
    rep.add(compare("right associative", "r (N x mu_A) == r (r x A)",
                    M.right @ kron(In, M.A.mult), M.right @ kron(M.right, IA), (n, a, a)))
    rep.add(compare("right unital", "r (N x eta_A) == id", M.right @ kron(In, M.A.unit), In, (n,)))
    rep.add(compare("actions commute", "l (B x r) == r (l x A)",
                    M.left @ kron(IB, M.right), M.right @ kron(M.left, IA), (b, n, a)))
    return rep


def is_bimodule_map(f: Mat, src: Bimodule, dst: Bimodule) -> Report:
    if f.shape != (dst.dim, src.dim):
        raise DimensionMismatch(f"bimodule map must be {dst.dim}x{src.dim}, got {f.shape}")
    rep = Report("bimodule map")
    rep.add(compare("left linear", "f l_src == l_dst (B x f)",
                    f @ src.left, dst.left @ kron(src.B.id, f), (src.B.dim, src.dim)))
    rep.add(compare("right linear", "f r_src == r_dst (f x A)",
                    f @ src.right, dst.right @ kron(f, src.A.id), (src.dim, src.A.dim)))
    return rep
