"""Inclusion matrices between subset levels of [m].

The matrix for parameters (m, i, n) has one row per i-subset and one
column per n-subset of [m], both in colexicographic order, with a 1
exactly where the row subset is contained in the column subset.  The
transpose identity (swap i,n for m-n,m-i) lets every rank question be
normalized to i <= min(n, m-n) first.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .combinatorics import binomial, colex_rank, subsets_iter, Subset
from .errors import MemoryBudgetError, ParameterError
from .fields import FieldSpec
from .linalg import ExactMatrix, rank_dense

__all__ = [
    "InclusionParams",
    "NormalizedParams",
    "normalize_params",
    "build_inclusion_matrix",
    "column_of",
    "streaming_rank",
    "eliminate_rank",
    "composition_identity_holds",
    "DEFAULT_MEMORY_BUDGET",
    "resolve_memory_budget",
]

DEFAULT_MEMORY_BUDGET = 1 << 30
_BUDGET_ENV = "INCLURANK_MEMORY_BUDGET"


def resolve_memory_budget(budget: int | None = None) -> int:
    """Explicit argument, else INCLURANK_MEMORY_BUDGET, else 1 GiB."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(_BUDGET_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"{_BUDGET_ENV} must be an integer byte count, got {env!r}") from None
    return DEFAULT_MEMORY_BUDGET


@dataclass(frozen=True)
class InclusionParams:
    """Parameters (m, i, n) plus the coefficient field."""

    m: int
    i: int
    n: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.i <= self.n <= self.m:
            raise ParameterError(
                f"need 0 <= i <= n <= m, got i={self.i}, n={self.n}, m={self.m}"
            )

    @property
    def n_rows(self) -> int:
        return binomial(self.m, self.i)

    @property
    def n_cols(self) -> int:
        return binomial(self.m, self.n)


@dataclass(frozen=True)
class NormalizedParams:
    """Parameters satisfying i <= min(n, m-n), with a transposition flag."""

    params: InclusionParams
    transposed: bool


def normalize_params(raw: InclusionParams) -> NormalizedParams:
    """Apply the transpose identity so that i <= min(n, m-n).

    Rank is invariant under transposition, so any rank computation may
    be done on the normalized parameters.
    """
    if raw.i <= raw.m - raw.n:
        return NormalizedParams(raw, transposed=False)
    flipped = InclusionParams(raw.m, raw.m - raw.n, raw.m - raw.i, raw.field)
    return NormalizedParams(flipped, transposed=True)


@lru_cache(maxsize=48)
def _inclusion_entries(m: int, i: int, n: int) -> np.ndarray:
    """Shared read-only 0/1 int64 entries for the (m, i, n) matrix."""
    n_rows = binomial(m, i)
    n_cols = binomial(m, n)
    a = np.zeros((n_rows, n_cols), dtype=np.int64)
    for col, y in enumerate(subsets_iter(m, n)):
        for x in combinations(y.elements, i):
            a[colex_rank(x), col] = 1
    a.flags.writeable = False
    return a


def build_inclusion_matrix(
    params: InclusionParams, *, memory_budget: int | None = None
) -> ExactMatrix:
    """Dense inclusion matrix over params.field, rows/columns in colex order.

    Raises MemoryBudgetError when the dense array would exceed the
    budget (default 1 GiB, INCLURANK_MEMORY_BUDGET overrides); callers
    holding p > 0 can fall back to streaming_rank.
    """
    budget = resolve_memory_budget(memory_budget)
    needed = params.n_rows * params.n_cols * 8
    if needed > budget:
        raise MemoryBudgetError(needed=needed, budget=budget)
    base = _inclusion_entries(params.m, params.i, params.n)
    if params.field.characteristic > 0:
        # 0/1 entries are already canonical residues for every p >= 2.
        return ExactMatrix(params.field, base, _canonical=True)
    return ExactMatrix(params.field, base.astype(object), _canonical=True)


def column_of(params: InclusionParams, y: Subset) -> list[int]:
    """Row ranks of the i-subsets of y: the support of y's matrix column."""
    if y.m != params.m:
        raise ParameterError(f"subset ground set [{y.m}] != matrix ground set [{params.m}]")
    if y.k != params.n:
        raise ParameterError(f"column subset must have {params.n} elements, got {y.k}")
    return sorted(colex_rank(x) for x in combinations(y.elements, params.i))


def streaming_rank(params: InclusionParams) -> int:
    """Rank over GF(p) holding only an echelon basis of the column space.

    Columns arrive one at a time from column_of and are inserted into a
    growing echelon basis (at most C(m, i) vectors of length C(m, i)),
    so memory never depends on C(m, n).
    """
    p = params.field.characteristic
    if p == 0:
        raise ParameterError("streaming rank needs a prime characteristic")
    if p == 2:
        return _streaming_rank_gf2(params)
    return _streaming_rank_gfp(params, p)


def _streaming_rank_gf2(params: InclusionParams) -> int:
    # Columns as int bitmasks; echelon basis keyed by highest set bit.
    basis: dict[int, int] = {}
    for y in subsets_iter(params.m, params.n):
        v = 0
        for r in column_of(params, y):
            v |= 1 << r
        while v:
            top = v.bit_length() - 1
            row = basis.get(top)
            if row is None:
                basis[top] = v
                break
            v ^= row
    return len(basis)


def _streaming_rank_gfp(params: InclusionParams, p: int) -> int:
    # Echelon basis keyed by pivot index; vectors normalized to pivot 1.
    basis: dict[int, np.ndarray] = {}
    n_rows = params.n_rows
    for y in subsets_iter(params.m, params.n):
        v = np.zeros(n_rows, dtype=np.int64)
        v[column_of(params, y)] = 1
        while True:
            support = np.nonzero(v)[0]
            if support.size == 0:
                break
            pos = int(support[0])
            row = basis.get(pos)
            if row is None:
                inv = pow(int(v[pos]), -1, p)
                basis[pos] = (v * inv) % p
                break
            v = (v - v[pos] * row) % p
    return len(basis)


def eliminate_rank(
    params: InclusionParams,
    *,
    memory_budget: int | None = None,
    backend: str | None = None,
    allow_streaming: bool = False,
) -> int:
    """Rank by elimination: dense when it fits, streaming as opt-in fallback."""
    try:
        mat = build_inclusion_matrix(params, memory_budget=memory_budget)
    except MemoryBudgetError:
        if allow_streaming and params.field.characteristic > 0:
            return streaming_rank(params)
        raise
    return rank_dense(mat, backend=backend)


def composition_identity_holds(m: int, j: int, i: int, n: int) -> bool:
    """Check A(j,i) @ A(i,n) == C(n-j, i-j) * A(j,n) as integer matrices."""
    if not 0 <= j <= i <= n <= m:
        raise ParameterError(f"need 0 <= j <= i <= n <= m, got {j},{i},{n},{m}")
    left = _inclusion_entries(m, j, i)
    mid = _inclusion_entries(m, i, n)
    right = _inclusion_entries(m, j, n)
    # Exact in int64: inner dimension C(m,i) stays far below 2**63 here.
    if binomial(m, i) >= 2**62:
        raise ParameterError(f"m={m} too large for int64 composition check")
    prod = left @ mid
    scale = math.comb(n - j, i - j)
    return bool(np.array_equal(prod, scale * right))
