"""Symmetric integer matrices attached to the Mertens function.

The package builds, for each n, the floor-division class structure, the
quotient semigroup algebra on its representatives, and the symmetric
matrices T, U, and M; it computes spectral norms and sweeps n to produce
CSV data for the norm-growth experiments.
"""

from ._backend import BACKEND
from .algebra import (
    ZERO,
    IntegerMatrix,
    QuotientVector,
    basis_vector,
    checked_matmul,
    class_sizes_vector,
    convolve,
    mertens_increments_vector,
    product_index_table,
    product_label_table,
    project,
    quotient_product,
    regular_representation,
    unit_vector,
)
from .build import (
    SymmetricMatrixPair,
    build_M_direct,
    build_M_via_rho,
    build_T,
    build_U_direct,
    build_U_via_rho,
    build_pair,
    verify_inverse_identity,
)
from .classes import INFINITY, ClassStructure, floor_div_nested_check
from .sieve import MertensTable, build_mertens_table, mobius_bruteforce
from .spectral import (
    Method,
    SpectralResult,
    spectral_norm,
    spectral_norm_dense,
    spectral_norm_power,
)
from .sweep import (
    RestrictedForm,
    SweepConfig,
    SweepRecord,
    classify,
    restricted_values,
    run_sweep,
    solve_record,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ZERO",
    "INFINITY",
    "ClassStructure",
    "floor_div_nested_check",
    "MertensTable",
    "build_mertens_table",
    "mobius_bruteforce",
    "QuotientVector",
    "IntegerMatrix",
    "quotient_product",
    "product_label_table",
    "product_index_table",
    "project",
    "unit_vector",
    "basis_vector",
    "class_sizes_vector",
    "mertens_increments_vector",
    "convolve",
    "regular_representation",
    "checked_matmul",
    "build_T",
    "build_U_direct",
    "build_M_direct",
    "build_U_via_rho",
    "build_M_via_rho",
    "verify_inverse_identity",
    "build_pair",
    "SymmetricMatrixPair",
    "Method",
    "SpectralResult",
    "spectral_norm",
    "spectral_norm_power",
    "spectral_norm_dense",
    "RestrictedForm",
    "SweepRecord",
    "SweepConfig",
    "classify",
    "restricted_values",
    "run_sweep",
    "solve_record",
    "write_csv",
    "__version__",
]
