"""Exact computations with weak distributive laws, weak wreath products and bilinear factorizations."""

from .algebra import (Algebra, AlgebraHom, Bimodule, cyclic_group_algebra, diagonal_algebra, direct_sum,
                      dual_numbers, ground_field, image_subalgebra, is_algebra_hom, matrix_units_algebra,
                      subalgebra, tensor_algebra, validate_algebra)
from .cells import (FactOneCell, MonadMorphCell, WdlOneCell, F_on_2cell, F_on_cells, check_2cell,
                    check_fact_onecell, check_monad_morph, check_trivial_onecell, check_wdl_onecell,
                    compose_fact_cells, compose_wdl_cells, rho_from)
from .errors import (BadIdempotent, CheckFailed, DimensionMismatch, IllDefinedSection, InternalInconsistency,
                     NoSolution, NotIdempotent, SchemaError, WreathlabError)
from .factorization import (BilinFact, fact_of_wdl, roundtrip_fact, roundtrip_object, validate_fact,
                            wdl_of_fact)
from .io import from_bundle, load_bundle, save_bundle, to_bundle
from .linalg import Mat, identity, kron, split_idempotent, zeros
from .ore import (OrePoly, PQQuasiDerivation, ore_check_properties, ore_psi, ore_psibar, ore_tilde_basis,
                  ore_wreath_mult, validate_pqqd)
from .report import Check, Report, Witness
from .wdl import Wdl, WreathProduct, check_wdl, is_strict, psibar, strict_wreath, weak_wreath

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraHom",
    "BadIdempotent",
    "BilinFact",
    "Bimodule",
    "Check",
    "check_2cell",
    "check_fact_onecell",
    "check_monad_morph",
    "check_trivial_onecell",
    "check_wdl",
    "check_wdl_onecell",
    "CheckFailed",
    "compose_fact_cells",
    "compose_wdl_cells",
    "cyclic_group_algebra",
    "diagonal_algebra",
    "DimensionMismatch",
    "direct_sum",
    "dual_numbers",
    "F_on_2cell",
    "F_on_cells",
    "fact_of_wdl",
    "FactOneCell",
    "from_bundle",
    "ground_field",
    "identity",
    "IllDefinedSection",
    "image_subalgebra",
    "InternalInconsistency",
    "is_algebra_hom",
    "is_strict",
    "kron",
    "load_bundle",
    "Mat",
    "matrix_units_algebra",
    "MonadMorphCell",
    "NoSolution",
    "NotIdempotent",
    "ore_check_properties",
    "ore_psi",
    "ore_psibar",
    "ore_tilde_basis",
    "ore_wreath_mult",
    "OrePoly",
    "PQQuasiDerivation",
    "psibar",
    "Report",
    "rho_from",
    "roundtrip_fact",
    "roundtrip_object",
    "save_bundle",
    "SchemaError",
    "split_idempotent",
    "strict_wreath",
    "subalgebra",
    "tensor_algebra",
    "to_bundle",
    "validate_algebra",
    "validate_fact",
    "validate_pqqd",
    "Wdl",
    "wdl_of_fact",
    "WdlOneCell",
    "weak_wreath",
    "Witness",
    "WreathlabError",
    "WreathProduct",
    "zeros",
]
