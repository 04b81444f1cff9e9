"""Exact ranks of subset inclusion matrices over prime fields and the rationals.

The central objects are the 0/1 matrices recording which i-subsets of
[m] = {1, ..., m} are contained in which n-subsets.  Their rank over
any field is given by a closed form (a sum of two-row hook dimensions
filtered by binomial divisibility); this package evaluates the formula,
recomputes ranks by exact elimination, and runs the supporting
representation-theoretic machinery (polytabloids, shadow maps, the
kernel filtration of the column space) as executable checks.

All subset indexing is colexicographic, everywhere.
"""

from .combinatorics import (
    Subset,
    SubsetIndex,
    binomial,
    p_divides_binomial,
    specht_dim,
    subset_rank,
    subset_unrank,
    subsets_iter,
)
from .errors import MemoryBudgetError, ParameterError
from .fields import GF2, QQ, FieldSpec
from .formula import RankBreakdown, RankTerm, rank_formula, rank_table, sweep_cases
from .inclusion import (
    InclusionParams,
    NormalizedParams,
    build_inclusion_matrix,
    column_of,
    composition_identity_holds,
    eliminate_rank,
    normalize_params,
    streaming_rank,
)
from .linalg import (
    ExactMatrix,
    SubspaceBasis,
    backend_name,
    column_space_basis,
    intersect,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank_dense,
    rref,
    row_space_basis,
)
from .specht import (
    FiltrationLayer,
    FiltrationReport,
    ModuleVector,
    ShadowCheckResult,
    TwoRowTableau,
    check_shadow_on_polytabloid,
    column_shadow_is_zero,
    filtration_audit,
    moved_tableau,
    polytabloid,
    shadow_apply,
    specht_span_rank,
    stabilizer_transpositions,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    "binomial",
    "build_inclusion_matrix",
    "check_shadow_on_polytabloid",
    "column_of",
    "column_shadow_is_zero",
    "column_space_basis",
    "composition_identity_holds",
    "eliminate_rank",
    "ExactMatrix",
    "FieldSpec",
    "filtration_audit",
    "FiltrationLayer",
    "FiltrationReport",
    "GF2",
    "InclusionParams",
    "intersect",
    "kernel_basis",
    "mat_mul",
    "mat_vec",
    "MemoryBudgetError",
    "ModuleVector",
    "moved_tableau",
    "normalize_params",
    "NormalizedParams",
    "p_divides_binomial",
    "ParameterError",
    "polytabloid",
    "QQ",
    "rank_dense",
    "rank_formula",
    "rank_table",
    "RankBreakdown",
    "RankTerm",
    "row_space_basis",
    "rref",
    "shadow_apply",
    "ShadowCheckResult",
    "specht_dim",
    "specht_span_rank",
    "stabilizer_transpositions",
    "streaming_rank",
    "Subset",
    "subset_rank",
    "subset_unrank",
    "SubsetIndex",
    "subsets_iter",
    "SubspaceBasis",
    "sweep_cases",
    "TwoRowTableau",
]
