"""
Command-line front end.

Every subcommand builds a :class:`Report`, prints it (text by default, JSON
with ``--json``, only the verdict with ``--quiet``) and exits 0 when every
check passes, 1 when some check fails and 2 when an input cannot be read.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import Algebra, cyclic_group_algebra, diagonal_algebra, ground_field, validate_algebra
from .cells import (FactOneCell, WdlOneCell, check_fact_onecell, check_wdl_onecell, rho_from)
from .errors import CheckFailed, SchemaError, WreathlabError
from .factorization import BilinFact, fact_of_wdl, roundtrip_fact, roundtrip_object, validate_fact, wdl_of_fact
from .gallery.bialgebra import (WeakBialgebra, cap_maps, cap_report, pair_groupoid, pair_groupoid_module,
                                smash_data, validate_weak_bialgebra)
from .gallery.dirsum import direct_sum_data
from .gallery.extension import corner_cell, e_extension_data, subalgebra_refinement
from .gallery.frobenius import FrobeniusStructure, validate_frobenius
from .gallery.triangle import triangle_data, triangle_report
from .io import cell_factorizations, dump, from_bundle, load_bundle, load_json, save_bundle, to_bundle
from .ore import (OrePoly, PQQuasiDerivation, is_classical, ore_check_properties, ore_strictness_diagrams,
                  ore_tilde_report, ore_wreath_mult, validate_pqqd)
from .report import Report
from .wdl import Wdl, WreathProduct, certify_wreath, check_wdl, flip_law, psibar_report, weak_wreath

DEFAULT_N = 6


def default_degree() -> int:
    raw = os.environ.get("WREATHLAB_DEFAULT_N")
    if raw is None:
        return DEFAULT_N
    try:
        n = int(raw)
    except ValueError:
        raise SchemaError("", f"WREATHLAB_DEFAULT_N must be a non-negative integer, got {raw!r}") from None
    if n < 0:
        raise SchemaError("", f"WREATHLAB_DEFAULT_N must be a non-negative integer, got {raw!r}")
    return n


class Outcome:
    """A report plus whatever the command produced."""

    def __init__(self, report: Report, result=None, bundle: dict | None = None):
        self.report = report
        self.result = result or {}
        self.bundle = bundle


def _emit(args, outcome: Outcome) -> int:
    rep = outcome.report
    if args.out and outcome.bundle is not None:
        save_bundle(outcome.bundle, args.out)
    if args.json:
        doc = {"report": rep.to_json(), **outcome.result}
        dump(doc, sys.stdout)
    elif args.quiet:
        print("PASS" if rep.ok else "FAIL")
    else:
        print(rep)
        for key, value in outcome.result.items():
            print(f"{key}: {json.dumps(value, ensure_ascii=False)}")
        if args.out and outcome.bundle is not None:
            print(f"wrote {args.out}")
    return 0 if rep.ok else 1


# -- subcommands -----------------------------------------------------------------------------


def validate_value(value) -> Report:
    """The natural certification for any loadable value."""
    if isinstance(value, Algebra):
        return validate_algebra(value)
    if isinstance(value, Wdl):
        return check_wdl(value.A, value.B, value.psi)
    if isinstance(value, BilinFact):
        return validate_fact(value)
    if isinstance(value, WdlOneCell):
        return check_wdl_onecell(value)
    if isinstance(value, FactOneCell):
        return check_fact_onecell(value)
    if isinstance(value, PQQuasiDerivation):
        return validate_pqqd(value)
    if isinstance(value, WeakBialgebra):
        rep = validate_weak_bialgebra(value)
        if rep.ok:
            rep.extend(cap_report(value))
        return rep
    if isinstance(value, FrobeniusStructure):
        return validate_frobenius(value)
    if isinstance(value, WreathProduct):
        return certify_wreath(value)
    raise SchemaError("", f"nothing to validate for a {type(value).__name__}")


def cmd_validate(args) -> Outcome:
    value = load_bundle(args.file)
    rep = validate_value(value)
    result = {"kind": type(value).__name__}
    if isinstance(value, PQQuasiDerivation):
        result["classical"] = is_classical(value)
    return Outcome(rep, result)


def _load(path, *types):
    value = load_bundle(path)
    if not isinstance(value, types):
        names = " or ".join(t.__name__ for t in types)
        raise SchemaError("", f"{path}: expected a {names} bundle, found {type(value).__name__}")
    return value


def cmd_check_wdl(args) -> Outcome:
    w = _load(args.file, Wdl)
    rep = check_wdl(w.A, w.B, w.psi)
    if rep.ok:
        rep.extend(psibar_report(w), "psibar")
    return Outcome(rep)


def cmd_wreath(args) -> Outcome:
    w = _load(args.file, Wdl)
    rep = check_wdl(w.A, w.B, w.psi)
    if not rep.ok:
        return Outcome(rep)
    wp = weak_wreath(w)
    rep.extend(certify_wreath(wp), "wreath")
    return Outcome(rep, {"dim": wp.product.dim}, to_bundle(wp))


def cmd_factor(args) -> Outcome:
    f = _load(args.file, BilinFact)
    rep = validate_fact(f)
    if not rep.ok:
        return Outcome(rep)
    w = wdl_of_fact(f, verify=False)
    rep.extend(check_wdl(w.A, w.B, w.psi), "derived law")
    return Outcome(rep, {"psi": w.psi.to_json()}, to_bundle(w))


def cmd_roundtrip(args) -> Outcome:
    value = _load(args.file, Wdl, BilinFact)
    if isinstance(value, Wdl):
        rep = check_wdl(value.A, value.B, value.psi)
        if rep.ok:
            rep.extend(roundtrip_object(value))
        return Outcome(rep)
    rep = validate_fact(value)
    if rep.ok:
        rep.extend(roundtrip_fact(value))
    return Outcome(rep)


def cmd_check_cell(args) -> Outcome:
    c = _load(args.file, WdlOneCell, FactOneCell)
    return Outcome(validate_value(c), {"V": c.V, "kind": type(c).__name__})


def cmd_lift_cell(args) -> Outcome:
    c = _load(args.file, WdlOneCell)
    srcF, dstF = cell_factorizations(args.file)
    srcF = fact_of_wdl(c.src) if srcF is None else srcF
    dstF = fact_of_wdl(c.dst) if dstF is None else dstF
    rep = check_wdl_onecell(c)
    if not rep.ok:
        return Outcome(rep)
    lifted = rho_from(c, srcF, dstF)
    rep.extend(check_fact_onecell(lifted), "lifted")
    bundle = None
    if args.out:
        out = Path(args.out)
        base = out.stem
        save_bundle(srcF, out.parent / f"{base}.src.json")
        save_bundle(dstF, out.parent / f"{base}.dst.json")
        bundle = to_bundle(lifted, (f"{base}.src.json", f"{base}.dst.json"))
    return Outcome(rep, {"rho": lifted.rho.xi.to_json()}, bundle)


# -- examples --------------------------------------------------------------------------------


def _example_triangle():
    fact, w = triangle_data()
    rep = triangle_report()
    wp = weak_wreath(w, verify=False)
    objects = {"fact": to_bundle(fact), "wdl": to_bundle(w), "wreath": to_bundle(wp)}
    table = {t: [str(x) for x in w.psi.column(j)] for j, t in enumerate(["1⊗1", "1⊗g", "g⊗1", "g⊗g"])}
    return rep, objects, {"psi": table, "pi": fact.pi.to_json(), "iota": fact.iota.to_json(),
                          "wreath_dim": wp.product.dim}


def _example_e_ext():
    d = e_extension_data(diagonal_algebra(2), [1, 0], ground_field())
    rep = Report("e-extension example")
    rep.extend(d.report)
    ref = subalgebra_refinement(d.wdl)
    rep.extend(ref.report, "refinement")
    rep.extend(ref.diagrams, "refinement")
    cell = corner_cell(d)
    rep.extend(check_wdl_onecell(cell), "corner cell")
    objects = {"wdl": to_bundle(d.wdl), "corner": to_bundle(d.corner), "phi": to_bundle(d.phi),
               "fact": to_bundle(d.fact), "refined": to_bundle(ref.wdl)}
    return rep, objects, {"psi": d.wdl.psi.to_json(), "refinement_strict": ref.strict}


def _example_dirsum():
    Z, k = cyclic_group_algebra(2), ground_field()
    d = direct_sum_data([flip_law(Z, k), flip_law(k, Z)])
    wp = weak_wreath(d.wdl, verify=False)
    objects = {"wdl": to_bundle(d.wdl), "block_sum": to_bundle(d.block_sum), "phi_R": to_bundle(d.phi_R)}
    return d.report, objects, {"ambient_dim": d.wdl.B.dim * d.wdl.A.dim, "wreath_dim": wp.product.dim}


def _example_frobenius():
    k = ground_field()
    d = direct_sum_data([flip_law(k, k), flip_law(k, k)])
    sf = d.sf
    rep = Report("law over k x k")
    rep.extend(sf.report)
    rep.extend(d.report, "direct sum")
    wp = weak_wreath(sf.wdl, verify=False)
    objects = {"wdl": to_bundle(sf.wdl), "phi_R": to_bundle(d.phi_R), "product": to_bundle(sf.product)}
    return rep, objects, {"psibar_rank": wp.splitting.rank, "quotient_dim": sf.BA.dim}


def _example_smash():
    wb, m = pair_groupoid(), pair_groupoid_module()
    d = smash_data(wb, m)
    cap, bar = cap_maps(wb)
    wp = weak_wreath(d.wdl, verify=False)
    objects = {"H": to_bundle(wb), "A": to_bundle(m.A), "action": to_bundle(m.action),
               "wdl": to_bundle(d.wdl), "R": to_bundle(d.frobenius), "cap": to_bundle(cap),
               "cap_bar": to_bundle(bar)}
    return d.report, objects, {"ambient_dim": d.wdl.B.dim * d.wdl.A.dim, "wreath_dim": wp.product.dim}


EXAMPLES = {
    "triangle": _example_triangle,
    "e-ext": _example_e_ext,
    "dirsum": _example_dirsum,
    "frobenius": _example_frobenius,
    "smash": _example_smash,
}


def cmd_example(args) -> Outcome:
    rep, objects, result = EXAMPLES[args.name]()
    bundle = {"kind": "example", "name": args.name, "objects": objects, "report": rep.to_json()}
    return Outcome(rep, result, bundle)


# -- ore ---------------------------------------------------------------------------------------


def _poly(arg: str, dim: int) -> OrePoly:
    """An Ore polynomial from a bundle file or an inline JSON coefficient list."""
    if Path(arg).is_file():
        data = load_json(arg)
        if isinstance(data, dict):
            p = from_bundle(data, Path(arg).parent, kind=data.get("kind", "orepoly"))
            if not isinstance(p, OrePoly) or p.dim != dim:
                raise SchemaError("", f"{arg}: expected a polynomial with coefficients of length {dim}")
            return p
    else:
        try:
            data = json.loads(arg)
        except json.JSONDecodeError as e:
            raise SchemaError("", f"{arg!r} is neither a file nor a JSON coefficient list: {e.msg}") from e
    return from_bundle({"dim": dim, "coefficients": data}, kind="orepoly")


def cmd_ore(args) -> Outcome:
    d = _load(args.pqqd, PQQuasiDerivation)
    rep = validate_pqqd(d)
    result = {"classical": is_classical(d)}
    if not rep.ok:
        return Outcome(rep, result)
    N = args.check if args.check is not None else default_degree()
    rep.extend(ore_check_properties(d, N))
    rep.extend(ore_strictness_diagrams(d, N))
    rep.extend(ore_tilde_report(d, N))
    result["N"] = N
    bundle = None
    if args.mult:
        f, g = (_poly(x, d.dim) for x in args.mult)
        fg = ore_wreath_mult(d, f, g)
        result["product"] = fg.to_json()
        bundle = to_bundle(fg)
    return Outcome(rep, result, bundle)


# -- entry point -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--quiet", action="store_true", help="print only PASS or FAIL")
    common.add_argument("--out", help="write the result bundle here")

    parser = argparse.ArgumentParser(prog="wreathlab", description="Exact checks for weak distributive laws.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if file:
            p.add_argument("file")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "validate any bundle")
    add("check-wdl", cmd_check_wdl, "check a weak distributive law")
    add("wreath", cmd_wreath, "build and certify the weak wreath product")
    add("factor", cmd_factor, "validate a bilinear factorization and derive its law")
    add("roundtrip", cmd_roundtrip, "law -> factorization -> law, or the reverse")
    add("check-cell", cmd_check_cell, "check a 1-cell")
    add("lift-cell", cmd_lift_cell, "lift a 1-cell of laws to factorizations")
    p = add("example", cmd_example, "run a worked example", file=False)
    p.add_argument("name", choices=sorted(EXAMPLES))
    p = add("ore", cmd_ore, "weak Ore extensions", file=False)
    p.add_argument("--pqqd", required=True, help="(p, q)-quasi-derivation bundle")
    p.add_argument("--check", type=int, metavar="N", help="degree bound (default $WREATHLAB_DEFAULT_N or 6)")
    p.add_argument("--mult", nargs=2, metavar=("F", "G"), help="multiply two polynomials (files or JSON lists)")
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return _emit(args, args.func(args))
    except SchemaError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CheckFailed as e:
        print(e.report, file=sys.stderr)
        return 1
    except WreathlabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
