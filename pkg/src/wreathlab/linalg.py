"""
Exact rational matrices.

Every linear map in the package is a :class:`Mat` acting on column vectors:
``rows`` is the codomain dimension and ``cols`` the domain dimension. Tensor
products of spaces use lexicographic bases with the left factor major, so
``e_i (x) e_j`` sits at index ``i * dim(W) + j``. That convention lives here
(:func:`kron`, :func:`swap`, :func:`permutation`, :func:`unravel`) and nowhere
else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy

from .errors import DimensionMismatch, NoSolution, NotIdempotent

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a canonical Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, numpy.integer):
        return Fraction(int(x))
    raise TypeError(f"not an exact scalar: {x!r}")


def _obj_array(rows, cols, data=None):
    a = numpy.empty((rows, cols), dtype=object)
    a.fill(ZERO)
    if data is not None:
        for i, row in enumerate(data):
            for j, x in enumerate(row):
                a[i, j] = scalar(x)
    return a


class Mat:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_a",)

    def __init__(self, entries, rows: int | None = None, cols: int | None = None):
        if isinstance(entries, numpy.ndarray):
            assert entries.ndim == 2, entries.shape
            a = numpy.empty(entries.shape, dtype=object)
            for idx, x in numpy.ndenumerate(entries):
                a[idx] = scalar(x)
        else:
            entries = [list(r) for r in entries]
            if rows is None:
                rows = len(entries)
            if cols is None:
                cols = len(entries[0]) if entries else 0
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise DimensionMismatch(f"entry grid does not match {rows}x{cols}")
            a = _obj_array(rows, cols, entries)
        if rows is not None and a.shape[0] != rows or cols is not None and a.shape[1] != cols:
            raise DimensionMismatch(f"entry grid {a.shape} does not match {rows}x{cols}")
        a.flags.writeable = False
        self._a = a

    @classmethod
    def _wrap(cls, a):
        m = object.__new__(cls)
        a.flags.writeable = False
        m._a = a
        return m

    # -- shape ---------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self):
        return self._a.shape

    def array(self):
        """A writable copy of the underlying object array."""
        return self._a.copy()

    def __getitem__(self, idx):
        return self._a[idx]

    def tolist(self):
        return [list(r) for r in self._a]

    def column(self, j: int) -> list:
        return list(self._a[:, j])

    def col(self, j: int) -> "Mat":
        return Mat._wrap(self._a[:, j : j + 1].copy())

    def select_cols(self, js) -> "Mat":
        js = list(js)
        return Mat._wrap(self._a[:, js].reshape(self.rows, len(js)).copy())

    def select_rows(self, js) -> "Mat":
        js = list(js)
        return Mat._wrap(self._a[js, :].reshape(len(js), self.cols).copy())

    @property
    def T(self) -> "Mat":
        return Mat._wrap(self._a.T.copy())

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other: "Mat") -> "Mat":
        return compose(self, other)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Mat._wrap(self._a + other._a)

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Mat._wrap(self._a - other._a)

    def __neg__(self) -> "Mat":
        return Mat._wrap(-self._a)

    def __mul__(self, c) -> "Mat":
        if isinstance(c, Mat):
            raise TypeError("use @ for composition")
        c = scalar(c)
        return Mat._wrap(self._a * c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and bool(numpy.all(self._a == other._a))

    def __hash__(self):
        return hash((self.shape, tuple(self._a.flat)))

    def is_zero(self) -> bool:
        return not numpy.any(self._a.astype(bool))

    def nonzero(self):
        return [tuple(int(x) for x in ij) for ij in zip(*numpy.nonzero(self._a))]

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._a)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in row] for row in self._a],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Mat":
        return cls(d["entries"], d["rows"], d["cols"])


# -- constructors ---------------------------------------------------------------


def zeros(rows: int, cols: int) -> Mat:
    return Mat._wrap(_obj_array(rows, cols))


def identity(n: int) -> Mat:
    a = _obj_array(n, n)
    for i in range(n):
        a[i, i] = ONE
    return Mat._wrap(a)


def vector(xs) -> Mat:
    """Column vector (a map k -> k^n)."""
    xs = list(xs)
    return Mat([[x] for x in xs], len(xs), 1)


def covector(xs) -> Mat:
    """Row vector (a map k^n -> k)."""
    xs = list(xs)
    return Mat([xs], 1, len(xs))


def basis_vector(n: int, i: int) -> Mat:
    a = _obj_array(n, 1)
    a[i, 0] = ONE
    return Mat._wrap(a)


def from_columns(cols, rows: int) -> Mat:
    """Matrix whose j-th column is the j-th vector in ``cols``."""
    cols = [list(c) for c in cols]
    a = _obj_array(rows, len(cols))
    for j, c in enumerate(cols):
        if len(c) != rows:
            raise DimensionMismatch(f"column {j} has length {len(c)}, expected {rows}")
        for i, x in enumerate(c):
            a[i, j] = scalar(x)
    return Mat._wrap(a)


def hstack(mats, rows: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return zeros(rows or 0, 0)
    if len({m.rows for m in mats}) != 1:
        raise DimensionMismatch("hstack of matrices with different row counts")
    return Mat._wrap(numpy.hstack([m._a for m in mats]))


def vstack(mats, cols: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return zeros(0, cols or 0)
    if len({m.cols for m in mats}) != 1:
        raise DimensionMismatch("vstack of matrices with different column counts")
    return Mat._wrap(numpy.vstack([m._a for m in mats]))


def block_diag(mats) -> Mat:
    mats = list(mats)
    r = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    a = _obj_array(r, c)
    i = j = 0
    for m in mats:
        a[i : i + m.rows, j : j + m.cols] = m._a
        i += m.rows
        j += m.cols
    return Mat._wrap(a)


def block_maps(dims):
    """Injections into and projections out of ``V_1 (+) ... (+) V_n``."""
    blocks = [identity(d) for d in dims]
    n = len(blocks)
    inj = [vstack([b if j == i else zeros(dims[j], dims[i]) for j in range(n)], cols=dims[i])
           for i, b in enumerate(blocks)]
    return inj, [m.T for m in inj]


# -- composition ------------------------------------------------------------------


def compose(f: Mat, g: Mat) -> Mat:
    """The map ``f . g`` (apply g first)."""
    if f.cols != g.rows:
        raise DimensionMismatch(f"cannot compose {f.rows}x{f.cols} after {g.rows}x{g.cols}")
    fa, ga = f._a, g._a
    out = _obj_array(f.rows, g.cols)
    # sparse row-by-row accumulation; most maps here are Kronecker padded
    grow = []
    for k in range(g.rows):
        nz = numpy.flatnonzero(ga[k])
        grow.append((nz, ga[k, nz]))
    for i in range(f.rows):
        row = fa[i]
        acc = out[i]
        for k in numpy.flatnonzero(row):
            nz, vals = grow[k]
            if len(nz):
                acc[nz] += row[k] * vals
    return Mat._wrap(out)


def chain(*maps: Mat) -> Mat:
    """``chain(f, g, h) == f @ g @ h``."""
    return reduce(compose, maps)


def kron(*maps: Mat) -> Mat:
    """Tensor product of linear maps, left factor major."""
    if not maps:
        return identity(1)
    out = maps[0]._a
    for m in maps[1:]:
        b = m._a
        r = _obj_array(out.shape[0] * b.shape[0], out.shape[1] * b.shape[1])
        for i, j in zip(*numpy.nonzero(out)):
            x = out[i, j]
            r[i * b.shape[0] : (i + 1) * b.shape[0], j * b.shape[1] : (j + 1) * b.shape[1]] = x * b
        out = r
    return Mat._wrap(out.copy() if len(maps) == 1 else out)


def unravel(index: int, dims) -> tuple:
    """Multi-index of a basis vector of ``V_0 (x) ... (x) V_{k-1}``."""
    dims = tuple(dims)
    if not dims:
        return ()
    if 0 in dims:
        raise DimensionMismatch("zero-dimensional factor has no basis vectors")
    return tuple(int(i) for i in numpy.unravel_index(index, dims))


def ravel(multi, dims) -> int:
    dims = tuple(dims)
    if not dims:
        return 0
    return int(numpy.ravel_multi_index(tuple(multi), dims))


def permutation_index(dims, order):
    """``idx`` with output basis vector ``i`` coming from input basis vector ``idx[i]``."""
    dims = tuple(dims)
    order = tuple(order)
    if sorted(order) != list(range(len(dims))):
        raise ValueError(f"{order} is not a permutation of {len(dims)} factors")
    n = int(numpy.prod(dims, dtype=numpy.int64)) if dims else 1
    return numpy.arange(n).reshape(dims).transpose(order).ravel()


def permutation(dims, order) -> Mat:
    """Map ``V_0 (x) ... (x) V_{k-1} -> V_{order[0]} (x) ... (x) V_{order[k-1]}``."""
    idx = permutation_index(dims, order)
    a = _obj_array(len(idx), len(idx))
    a[numpy.arange(len(idx)), idx] = ONE
    return Mat._wrap(a)


def permute_domain(M: Mat, dims, order) -> Mat:
    """``M @ permutation(dims, order)`` without forming the permutation matrix."""
    idx = permutation_index(dims, order)
    return M.select_cols(numpy.argsort(idx))


def swap(m: int, n: int) -> Mat:
    """The flip ``V (x) W -> W (x) V`` for dim V = m, dim W = n."""
    return permutation((m, n), (1, 0))


# -- elimination ------------------------------------------------------------------


def rref(M: Mat):
    """Reduced row echelon form and pivot columns."""
    a = M.array()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if a[i, c] != ZERO]
        if not nz:
            continue
        p = nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, c]
        for i in range(rows):
            if i != r and a[i, c] != ZERO:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return Mat._wrap(a), pivots


def rank(M: Mat) -> int:
    return len(rref(M)[1])


def kernel_basis(M: Mat) -> Mat:
    """Columns spanning ker(M), one per free variable of the reduced form."""
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        basis.append(v)
    return from_columns(basis, M.cols)


def column_basis(M: Mat):
    """Pivot columns of M: a basis of its image chosen from its own columns."""
    _, pivots = rref(M)
    return M.select_cols(pivots), pivots


def solve(A: Mat, B: Mat) -> Mat:
    """Some X with A @ X == B (free variables set to zero)."""
    if A.rows != B.rows:
        raise DimensionMismatch(f"solve: A has {A.rows} rows, B has {B.rows}")
    aug = hstack([A, B])
    R, pivots = rref(aug)
    if any(p >= A.cols for p in pivots):
        raise NoSolution("inconsistent linear system")
    X = _obj_array(A.cols, B.cols)
    for r, p in enumerate(pivots):
        X[p, :] = R[r, A.cols :]
    return Mat._wrap(X)


def in_span(M: Mat, v: Mat) -> bool:
    try:
        solve(M, v)
    except NoSolution:
        return False
    return True


@dataclass(frozen=True)
class Splitting:
    """``incl @ proj == idempotent`` and ``proj @ incl == identity(rank)``."""

    idempotent: Mat
    proj: Mat
    incl: Mat

    @property
    def rank(self) -> int:
        return self.incl.cols


def split_idempotent(E: Mat) -> Splitting:
    if E.rows != E.cols:
        raise DimensionMismatch(f"idempotent must be square, got {E.shape}")
    if E @ E != E:
        raise NotIdempotent("E @ E != E")
    incl, _ = column_basis(E)
    proj = solve(incl, E)
    assert proj @ incl == identity(incl.cols)
    return Splitting(E, proj, incl)
