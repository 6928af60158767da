"""Worked families of weak distributive laws."""

from .bialgebra import (ModuleAlgebra, WeakBialgebra, cap_maps, pair_groupoid, pair_groupoid_module, smash_data,
                        smash_wdl, validate_weak_bialgebra)
from .dirsum import diagonal_units, direct_sum_data, direct_sum_wdl
from .extension import corner_cell, e_extension, e_extension_data, subalgebra_refinement
from .frobenius import FrobeniusStructure, sf_construct, sf_weak_dl, tensor_over_R, validate_frobenius
from .triangle import triangle_fixture

__all__ = [
    "cap_maps",
    "corner_cell",
    "diagonal_units",
    "direct_sum_data",
    "direct_sum_wdl",
    "e_extension",
    "e_extension_data",
    "FrobeniusStructure",
    "ModuleAlgebra",
    "pair_groupoid",
    "pair_groupoid_module",
    "sf_construct",
    "sf_weak_dl",
    "smash_data",
    "smash_wdl",
    "subalgebra_refinement",
    "tensor_over_R",
    "triangle_fixture",
    "validate_frobenius",
    "validate_weak_bialgebra",
    "WeakBialgebra",
]
