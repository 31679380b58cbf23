"""Self-dual cyclic and negacyclic codes of length p^s (p an odd prime)
over the chain ring F_{p^m} + u F_{p^m} with u^2 = 0: exact construction,
streaming enumeration, closed-form counting, and an independent
verification engine."""

from .binomial import binom_mod_p, g_entry
from .chainring import (
    RElem,
    RIdealGens,
    RVector,
    canonical_form,
    inner_product,
    is_self_dual,
    is_self_orthogonal,
    r_add,
    r_mul,
    r_neg,
    r_scale,
    span_dimension,
)
from .enumerator import (
    CaseDescriptor,
    CodeSpec,
    build_code,
    classify_cases,
    count_self_dual,
    descriptor_codes,
    descriptor_count,
    enumerate_codes,
    sample_codes,
    to_negacyclic,
)
from .fieldcore import FieldSpec, FqElem, find_irreducible, is_prime
from .gmatrix import (
    MatrixFp,
    SolutionColumn,
    build_g_direct,
    build_g_kron,
    g_truncated,
    kron,
    min_level,
    rank_fp,
    solution_column,
    truncate_g,
)
from .reciprocal import (
    SolutionBasis,
    XPoly,
    basis_convert,
    is_solution,
    kernel_oracle,
    reciprocal_oracle,
    reciprocal_transform,
    solution_basis,
)

__version__ = "0.1.0"

__all__ = [
    "CaseDescriptor",
    "CodeSpec",
    "FieldSpec",
    "FqElem",
    "MatrixFp",
    "RElem",
    "RIdealGens",
    "RVector",
    "SolutionBasis",
    "SolutionColumn",
    "XPoly",
    "basis_convert",
    "binom_mod_p",
    "build_code",
    "build_g_direct",
    "build_g_kron",
    "canonical_form",
    "classify_cases",
    "count_self_dual",
    "descriptor_codes",
    "descriptor_count",
    "enumerate_codes",
    "find_irreducible",
    "g_entry",
    "g_truncated",
    "inner_product",
    "is_prime",
    "is_self_dual",
    "is_self_orthogonal",
    "is_solution",
    "kernel_oracle",
    "kron",
    "min_level",
    "r_add",
    "r_mul",
    "r_neg",
    "r_scale",
    "rank_fp",
    "reciprocal_oracle",
    "reciprocal_transform",
    "sample_codes",
    "solution_basis",
    "solution_column",
    "span_dimension",
    "to_negacyclic",
    "truncate_g",
]
