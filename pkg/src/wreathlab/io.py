"""
JSON bundles for every value the library works with.

Each bundle is a JSON object. A ``"kind"`` field selects the type; without it
the kind is inferred from the keys. Rationals are strings ``"p/q"`` (integers
are accepted too) and are written back in lowest terms, so save then load
reproduces the bundle exactly. Schema violations raise :class:`SchemaError`
carrying a JSON pointer to the offending entry.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from jsonschema import Draft202012Validator

from .algebra import Algebra
from .cells import FactOneCell, MonadMorphCell, WdlOneCell
from .errors import SchemaError, WreathlabError
from .factorization import BilinFact
from .gallery.bialgebra import WeakBialgebra
from .gallery.frobenius import FrobeniusStructure
from .linalg import Mat, scalar, vector
from .ore import OrePoly, PQQuasiDerivation
from .wdl import Wdl, WreathProduct, weak_wreath

RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$"},
    ]
}
VECTOR = {"type": "array", "items": {"$ref": "#/$defs/rational"}}
MAT = {
    "type": "object",
    "required": ["rows", "cols", "entries"],
    "properties": {
        "rows": {"type": "integer", "minimum": 0},
        "cols": {"type": "integer", "minimum": 0},
        "entries": {"type": "array", "items": {"$ref": "#/$defs/vector"}},
    },
}
ALGEBRA = {
    "type": "object",
    "required": ["dim", "unit", "mult"],
    "properties": {
        "dim": {"type": "integer", "minimum": 0},
        "basis": {"type": "array", "items": {"type": "string"}},
        "unit": {"$ref": "#/$defs/vector"},
        "mult": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [
                    {"type": "integer", "minimum": 0},
                    {"type": "integer", "minimum": 0},
                    {"type": "integer", "minimum": 0},
                    {"$ref": "#/$defs/rational"},
                ],
                "items": False,
                "minItems": 4,
            },
        },
    },
}
DEFS = {"rational": RATIONAL, "vector": VECTOR, "mat": MAT, "algebra": ALGEBRA}


def _obj(required, props):
    return {"type": "object", "required": required, "properties": props}


_alg, _mat, _vec = {"$ref": "#/$defs/algebra"}, {"$ref": "#/$defs/mat"}, {"$ref": "#/$defs/vector"}

SCHEMAS = {
    "mat": MAT,
    "algebra": ALGEBRA,
    "wdl": _obj(["A", "B", "psi"], {"A": _alg, "B": _alg, "psi": _mat}),
    "fact": _obj(["A", "B", "R", "alpha", "beta", "iota"],
                 {"A": _alg, "B": _alg, "R": _alg, "alpha": _mat, "beta": _mat, "iota": _mat}),
    "cell": _obj(["src", "dst", "V", "xi", "zeta"],
                 {"src": {"type": "string"}, "dst": {"type": "string"},
                  "src_fact": {"type": "string"}, "dst_fact": {"type": "string"},
                  "V": {"type": "integer", "minimum": 0}, "xi": _mat, "zeta": _mat, "rho": _mat}),
    "pqqd": _obj(["B", "p", "q", "sigma", "delta"],
                 {"B": _alg, "p": _vec, "q": _vec, "sigma": _mat, "delta": _mat}),
    "orepoly": _obj(["dim", "coefficients"],
                    {"dim": {"type": "integer", "minimum": 0},
                     "coefficients": {"type": "array", "items": _vec}}),
    "weak_bialgebra": {"allOf": [ALGEBRA, _obj(["comult", "counit"], {"comult": _mat, "counit": _mat})]},
    "frobenius": {"allOf": [ALGEBRA, _obj(["frobenius_functional", "frobenius_pairs"], {
        "frobenius_functional": _vec,
        "frobenius_pairs": {"type": "array", "items": {"type": "array", "prefixItems": [_vec, _vec],
                                                        "items": False, "minItems": 2}},
    })]},
    "wreath": _obj(["wdl", "psibar", "proj", "incl", "product", "alpha", "beta"],
                   {"wdl": {"$ref": "#/$defs/wdl"}, "psibar": _mat, "proj": _mat, "incl": _mat,
                    "product": _alg, "alpha": _mat, "beta": _mat}),
}
DEFS["wdl"] = SCHEMAS["wdl"]

# keys that identify a bundle when "kind" is absent, most specific first
_SIGNATURES = [
    ("wreath", {"wdl", "psibar", "proj", "incl"}),
    ("fact", {"A", "B", "R", "alpha", "beta", "iota"}),
    ("cell", {"src", "dst", "V", "xi", "zeta"}),
    ("pqqd", {"B", "p", "q", "sigma", "delta"}),
    ("wdl", {"A", "B", "psi"}),
    ("weak_bialgebra", {"comult", "counit", "mult"}),
    ("frobenius", {"frobenius_functional", "frobenius_pairs", "mult"}),
    ("orepoly", {"coefficients", "dim"}),
    ("mat", {"rows", "cols", "entries"}),
    ("algebra", {"dim", "unit", "mult"}),
]


def _pointer(path) -> str:
    return "".join(f"/{str(p).replace('~', '~0').replace('/', '~1')}" for p in path)


def validate_schema(kind: str, data) -> None:
    if kind not in SCHEMAS:
        raise SchemaError("/kind", f"unknown bundle kind {kind!r}")
    schema = dict(SCHEMAS[kind], **{"$defs": DEFS})
    errors = sorted(Draft202012Validator(schema).iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise SchemaError(_pointer(e.absolute_path), e.message)


def detect_kind(data) -> str:
    if not isinstance(data, dict):
        raise SchemaError("", "a bundle must be a JSON object")
    if "kind" in data:
        return data["kind"]
    for kind, keys in _SIGNATURES:
        if keys <= data.keys():
            return kind
    raise SchemaError("", f"cannot tell what kind of bundle has keys {sorted(data)}")


# -- decoding with pointer-carrying shape errors -------------------------------------------


def _mat(d, at) -> Mat:
    rows, cols, entries = d["rows"], d["cols"], d["entries"]
    if len(entries) != rows:
        raise SchemaError(f"{at}/entries", f"expected {rows} rows, found {len(entries)}")
    for i, row in enumerate(entries):
        if len(row) != cols:
            raise SchemaError(f"{at}/entries/{i}", f"expected {cols} entries, found {len(row)}")
    return Mat.from_json(d)


def _algebra(d, at, name="") -> Algebra:
    n = d["dim"]
    if len(d["unit"]) != n:
        raise SchemaError(f"{at}/unit", f"expected {n} coordinates, found {len(d['unit'])}")
    if "basis" in d and len(d["basis"]) != n:
        raise SchemaError(f"{at}/basis", f"expected {n} names, found {len(d['basis'])}")
    for t, (i, j, k, _) in enumerate(d["mult"]):
        for pos, x in enumerate((i, j, k)):
            if x >= n:
                raise SchemaError(f"{at}/mult/{t}/{pos}", f"index {x} out of range for dimension {n}")
    return Algebra.from_json(d, name)


def _vector(xs, n, at) -> Mat:
    if len(xs) != n:
        raise SchemaError(at, f"expected {n} coordinates, found {len(xs)}")
    return vector(xs)


def _shaped(build, at):
    """Turn a constructor's dimension complaint into a schema error at ``at``."""
    try:
        return build()
    except WreathlabError as e:
        if isinstance(e, SchemaError):
            raise
        raise SchemaError(at, str(e)) from e


def _wdl(d, at="") -> Wdl:
    A, B = _algebra(d["A"], f"{at}/A", "A"), _algebra(d["B"], f"{at}/B", "B")
    return _shaped(lambda: Wdl(A, B, _mat(d["psi"], f"{at}/psi")), f"{at}/psi")


def _fact(d, at="") -> BilinFact:
    A, B, R = (_algebra(d[k], f"{at}/{k}", k) for k in ("A", "B", "R"))
    mats = {k: _mat(d[k], f"{at}/{k}") for k in ("alpha", "beta", "iota")}
    return _shaped(lambda: BilinFact(A, B, R, **mats), at or "/")


def _pqqd(d, at="") -> PQQuasiDerivation:
    B = _algebra(d["B"], f"{at}/B", "B")
    p, q = _vector(d["p"], B.dim, f"{at}/p"), _vector(d["q"], B.dim, f"{at}/q")
    return _shaped(lambda: PQQuasiDerivation(B, p, q, _mat(d["sigma"], f"{at}/sigma"),
                                             _mat(d["delta"], f"{at}/delta")), at or "/")


def _weak_bialgebra(d, at="") -> WeakBialgebra:
    H = _algebra(d, at, "H")
    return _shaped(lambda: WeakBialgebra(H, _mat(d["comult"], f"{at}/comult"), _mat(d["counit"], f"{at}/counit")),
                   at or "/")


def _frobenius(d, at="") -> FrobeniusStructure:
    R = _algebra(d, at, "R")
    psi = Mat([[scalar(x) for x in _vector(d["frobenius_functional"], R.dim, f"{at}/frobenius_functional").column(0)]],
              1, R.dim)
    pairs = [(_vector(e, R.dim, f"{at}/frobenius_pairs/{i}/0"), _vector(f, R.dim, f"{at}/frobenius_pairs/{i}/1"))
             for i, (e, f) in enumerate(d["frobenius_pairs"])]
    return FrobeniusStructure.from_pairs(R, psi, pairs)


def _cell(d, base: Path, at=""):
    src, dst = (load_bundle(base / d[k]) for k in ("src", "dst"))
    V = d["V"]

    def morph(key, X, Y):
        return _shaped(lambda: MonadMorphCell(X, Y, V, _mat(d[key], f"{at}/{key}")), f"{at}/{key}")

    def build():
        if isinstance(src, BilinFact) and isinstance(dst, BilinFact):
            if "rho" not in d:
                raise SchemaError(f"{at}/rho", "a cell between factorizations needs rho")
            return FactOneCell(src, dst, morph("xi", src.A, dst.A), morph("zeta", src.B, dst.B),
                               morph("rho", src.R, dst.R))
        if isinstance(src, Wdl) and isinstance(dst, Wdl):
            return WdlOneCell(src, dst, morph("xi", src.A, dst.A), morph("zeta", src.B, dst.B))
        raise SchemaError(f"{at}/src", "src and dst must both be laws or both be factorizations")

    return _shaped(build, at or "/")


def cell_factorizations(path, data=None):
    """The optional ``src_fact``/``dst_fact`` bundles referenced by a cell file."""
    path = Path(path)
    data = json.loads(path.read_text()) if data is None else data
    return tuple(load_bundle(path.parent / data[k]) if k in data else None for k in ("src_fact", "dst_fact"))


def _wreath(d, at="") -> WreathProduct:
    wp = weak_wreath(_wdl(d["wdl"], f"{at}/wdl"))
    for key in ("psibar", "proj", "incl"):
        stored = _mat(d[key], f"{at}/{key}")
        if stored != getattr(wp, key):
            raise SchemaError(f"{at}/{key}", f"stored {key} disagrees with the recomputed one")
    return wp


def from_bundle(data, base: Path | str = ".", kind: str | None = None):
    """Typed value from parsed JSON; cell bundles resolve paths against ``base``."""
    kind = kind or detect_kind(data)
    validate_schema(kind, data)
    base = Path(base)
    decoders = {
        "mat": lambda: _mat(data, ""),
        "algebra": lambda: _algebra(data, ""),
        "wdl": lambda: _wdl(data),
        "fact": lambda: _fact(data),
        "cell": lambda: _cell(data, base),
        "pqqd": lambda: _pqqd(data),
        "orepoly": lambda: OrePoly.from_json(data["coefficients"], data["dim"]),
        "weak_bialgebra": lambda: _weak_bialgebra(data),
        "frobenius": lambda: _frobenius(data),
        "wreath": lambda: _wreath(data),
    }
    try:
        return decoders[kind]()
    except (ValueError, ZeroDivisionError) as e:
        if isinstance(e, SchemaError):
            raise
        raise SchemaError("", str(e)) from e


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise SchemaError("", f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    except OSError as e:
        raise SchemaError("", f"{path}: {e.strerror}") from e


def load_bundle(path):
    path = Path(path)
    return from_bundle(load_json(path), path.parent)


# -- encoding ------------------------------------------------------------------------------


def _wdl_json(w: Wdl) -> dict:
    return {"A": w.A.to_json(), "B": w.B.to_json(), "psi": w.psi.to_json()}


def to_bundle(value, cell_paths: tuple[str, str] | None = None) -> dict:
    """JSON bundle for ``value``; cells need the file paths of their endpoints."""
    if isinstance(value, Mat):
        return {"kind": "mat", **value.to_json()}
    if isinstance(value, Algebra):
        return {"kind": "algebra", **value.to_json()}
    if isinstance(value, Wdl):
        return {"kind": "wdl", **_wdl_json(value)}
    if isinstance(value, BilinFact):
        return {"kind": "fact", "A": value.A.to_json(), "B": value.B.to_json(), "R": value.R.to_json(),
                "alpha": value.alpha.to_json(), "beta": value.beta.to_json(), "iota": value.iota.to_json()}
    if isinstance(value, (WdlOneCell, FactOneCell)):
        if cell_paths is None:
            raise ValueError("cell bundles reference their endpoints by path; pass cell_paths")
        out = {"kind": "cell", "src": cell_paths[0], "dst": cell_paths[1], "V": value.V,
               "xi": value.xi.xi.to_json(), "zeta": value.zeta.xi.to_json()}
        if isinstance(value, FactOneCell):
            out["rho"] = value.rho.xi.to_json()
        return out
    if isinstance(value, PQQuasiDerivation):
        return {"kind": "pqqd", **value.to_json()}
    if isinstance(value, OrePoly):
        return {"kind": "orepoly", "dim": value.dim, "coefficients": value.to_json()}
    if isinstance(value, WeakBialgebra):
        return {"kind": "weak_bialgebra", **value.H.to_json(),
                "comult": value.comult.to_json(), "counit": value.counit.to_json()}
    if isinstance(value, FrobeniusStructure):
        return {"kind": "frobenius", **value.R.to_json(),
                "frobenius_functional": [str(x) for x in value.functional.array()[0]],
                "frobenius_pairs": _pairs_json(value)}
    if isinstance(value, WreathProduct):
        return {"kind": "wreath", "wdl": _wdl_json(value.wdl), "psibar": value.psibar.to_json(),
                "proj": value.proj.to_json(), "incl": value.incl.to_json(),
                "product": value.product.to_json(), "alpha": value.alpha.map.to_json(),
                "beta": value.beta.map.to_json()}
    raise TypeError(f"no bundle format for {type(value).__name__}")


def _pairs_json(s: FrobeniusStructure):
    """``sum_i e_i (x) f_i`` as pairs ``(e_i, f_i)`` with ``e_i`` running over the basis."""
    r = s.R.dim
    t = s.element.column(0)
    pairs = []
    for i in range(r):
        f = t[i * r:(i + 1) * r]
        if any(f):
            pairs.append([[str(int(j == i)) for j in range(r)], [str(x) for x in f]])
    return pairs


def dump(data, fh=None) -> str:
    text = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if fh is not None:
        fh.write(text)
    return text


def save_bundle(value, path, cell_paths: tuple[str, str] | None = None) -> dict:
    data = value if isinstance(value, dict) else to_bundle(value, cell_paths)
    path = Path(path)
    if path.parent and not path.parent.exists():
        os.makedirs(path.parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        dump(data, fh)
    return data
