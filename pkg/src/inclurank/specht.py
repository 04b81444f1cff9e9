"""Two-row tableaux, polytabloids, shadow maps, and the rank filtration.

A tabloid with second row Y (a k-subset of [m]) is identified with Y
itself, so vectors in the permutation module M^(m-k,k) are coefficient
vectors indexed by k-subsets in colex order.  The shadow map sends a
k-subset to the sum of its j-subsets; its matrix is exactly the
(m, j, k) inclusion matrix, which is what ties the representation
theory back to the rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from .combinatorics import binomial, colex_rank, p_divides_binomial, specht_dim, subsets_iter
from .errors import ParameterError
from .fields import FieldSpec
from .formula import rank_formula
from .inclusion import InclusionParams, build_inclusion_matrix
from .linalg import (
    ExactMatrix,
    SubspaceBasis,
    column_space_basis,
    intersect,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank_dense,
)

__all__ = [
    "TwoRowTableau",
    "ModuleVector",
    "stabilizer_transpositions",
    "polytabloid",
    "moved_tableau",
    "shadow_apply",
    "ShadowCheckResult",
    "check_shadow_on_polytabloid",
    "specht_span_rank",
    "column_shadow_is_zero",
    "FiltrationLayer",
    "FiltrationReport",
    "filtration_audit",
]


@dataclass(frozen=True)
class TwoRowTableau:
    """Two rows of distinct entries that together list [m] exactly once.

    The second row may be longer than the first; only the first
    min(len(first), len(second)) columns have both cells filled, and
    those are the columns the stabilizer acts on.
    """

    first_row: tuple[int, ...]
    second_row: tuple[int, ...]

    def __post_init__(self):
        first = tuple(self.first_row)
        second = tuple(self.second_row)
        object.__setattr__(self, "first_row", first)
        object.__setattr__(self, "second_row", second)
        m = len(first) + len(second)
        if sorted(first + second) != list(range(1, m + 1)):
            raise ParameterError(
                f"rows must partition [{m}], got first={first}, second={second}"
            )

    @property
    def m(self) -> int:
        return len(self.first_row) + len(self.second_row)

    @property
    def n_full_columns(self) -> int:
        return min(len(self.first_row), len(self.second_row))


@dataclass(frozen=True, eq=False)
class ModuleVector:
    """Coefficient vector on the k-subset (tabloid) basis of M^(m-k,k)."""

    field: FieldSpec
    m: int
    k: int
    coeffs: np.ndarray

    def __post_init__(self):
        dim = binomial(self.m, self.k)
        arr = np.asarray(self.coeffs)
        if arr.ndim != 1 or arr.shape[0] != dim:
            raise ParameterError(f"need {dim} coefficients for (m={self.m}, k={self.k})")
        p = self.field.characteristic
        if p > 0:
            arr = arr.astype(np.int64) % p
        elif arr.dtype != object:
            arr = arr.astype(object)
        object.__setattr__(self, "coeffs", arr)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs != 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (
            self.field == other.field
            and self.m == other.m
            and self.k == other.k
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    __hash__ = None  # type: ignore[assignment]


def stabilizer_transpositions(t: TwoRowTableau, j: int) -> list[tuple[int, int]]:
    """The j transpositions (first[c], second[c]) of the first j columns."""
    if not 0 <= j <= t.n_full_columns:
        raise ParameterError(f"j={j} exceeds the {t.n_full_columns} full columns")
    return [(t.first_row[c], t.second_row[c]) for c in range(j)]


def polytabloid(t: TwoRowTableau, j: int, field: FieldSpec) -> ModuleVector:
    """Signed sum over the 2^j column swaps applied to the tabloid of t.

    Each subset S of the first j columns contributes (-1)^|S| on the
    tabloid whose second row has second[c] replaced by first[c] for
    c in S.  Signs are computed in the integers and reduced, so GF(2)
    comes out as a plain indicator vector.
    """
    if not 0 <= j <= t.n_full_columns:
        raise ParameterError(f"j={j} exceeds the {t.n_full_columns} full columns")
    k = len(t.second_row)
    coeffs = np.zeros(binomial(t.m, k), dtype=np.int64)
    for size in range(j + 1):
        sign = -1 if size % 2 else 1
        for cols in combinations(range(j), size):
            second = list(t.second_row)
            for c in cols:
                second[c] = t.first_row[c]
            coeffs[colex_rank(sorted(second))] += sign
    return ModuleVector(field, t.m, k, coeffs)


def moved_tableau(t: TwoRowTableau, j: int) -> TwoRowTableau:
    """Append every second-row entry past column j to the first row."""
    if not 0 <= j <= len(t.second_row):
        raise ParameterError(f"j={j} exceeds second-row length {len(t.second_row)}")
    return TwoRowTableau(t.first_row + t.second_row[j:], t.second_row[:j])


def shadow_apply(v: ModuleVector, j: int) -> ModuleVector:
    """Image of v under the j-shadow map M^(m-k,k) -> M^(m-j,j).

    The matrix is the (m, j, k) inclusion matrix; j = k is the
    identity, j = 0 the sum-of-coefficients functional into the
    one-dimensional module.
    """
    if not 0 <= j <= v.k:
        raise ParameterError(f"need 0 <= j <= k, got j={j}, k={v.k}")
    mat = build_inclusion_matrix(InclusionParams(v.m, j, v.k, v.field))
    return ModuleVector(v.field, v.m, j, mat_vec(mat, v.coeffs))


@dataclass(frozen=True)
class ShadowCheckResult:
    """Outcome of one shadow-on-polytabloid identity check."""

    passed: bool
    j: int
    k: int
    mismatch_index: int | None = None
    got: object = None
    want: object = None

    def __bool__(self) -> bool:
        return self.passed


def check_shadow_on_polytabloid(
    t: TwoRowTableau, j: int, k: int, field: FieldSpec
) -> ShadowCheckResult:
    """Verify the two shadow identities on the j-polytabloid of t.

    For k < j the image must vanish; for k = j it must equal the
    j-polytabloid of the moved tableau.  Returns the first offending
    coefficient on failure instead of raising.
    """
    if not 0 <= k <= j <= t.n_full_columns:
        raise ParameterError(f"need 0 <= k <= j <= {t.n_full_columns}, got k={k}, j={j}")
    image = shadow_apply(polytabloid(t, j, field), k)
    if k < j:
        want = np.zeros(image.coeffs.shape[0], dtype=np.int64)
    else:
        want = polytabloid(moved_tableau(t, j), j, field).coeffs
    diff = np.nonzero(image.coeffs != want)[0]
    if diff.size == 0:
        return ShadowCheckResult(True, j, k)
    idx = int(diff[0])
    return ShadowCheckResult(False, j, k, idx, image.coeffs[idx], want[idx])


def specht_span_rank(m: int, jj: int, field: FieldSpec, *, full_family: bool = False) -> int:
    """Rank of the span of the jj-polytabloids inside M^(m-jj,jj).

    The default generators take each jj-subset as second row with the
    complement in increasing order on top (one tableau per subset);
    full_family=True instead enumerates every ordered choice of the jj
    column heads, which is factorially larger and only sensible for
    small m.  Both span the same subspace, which the tests confirm.
    """
    if not 0 <= 2 * jj <= m:
        raise ParameterError(f"need 0 <= jj <= m/2, got jj={jj}, m={m}")
    vectors = []
    full = range(1, m + 1)
    for y in subsets_iter(m, jj):
        complement = tuple(e for e in full if e not in y.elements)
        if full_family:
            for heads in permutations(complement, jj):
                rest = tuple(e for e in complement if e not in heads)
                t = TwoRowTableau(heads + rest, y.elements)
                vectors.append(polytabloid(t, jj, field).coeffs)
        else:
            t = TwoRowTableau(complement, y.elements)
            vectors.append(polytabloid(t, jj, field).coeffs)
    stacked = np.stack(vectors)
    return rank_dense(ExactMatrix(field, stacked))


def column_shadow_is_zero(params: InclusionParams, j: int) -> bool:
    """Whether the j-shadow map annihilates every column of the matrix.

    Expected to hold exactly when the characteristic divides
    C(n-j, i-j); the check multiplies the two matrices over the field.
    """
    if not 0 <= j <= params.i:
        raise ParameterError(f"need 0 <= j <= i, got j={j}, i={params.i}")
    shadow = build_inclusion_matrix(InclusionParams(params.m, j, params.i, params.field))
    cols = build_inclusion_matrix(params)
    return not np.any(mat_mul(shadow, cols).entries != 0)


@dataclass(frozen=True)
class FiltrationLayer:
    """One layer of the kernel filtration of the column space."""

    j: int
    dim_p: int
    dim_l: int
    predicted_l: int
    included: bool


@dataclass(frozen=True)
class FiltrationReport:
    """Layer-by-layer accounting of the column space against the formula."""

    params: InclusionParams
    layers: tuple[FiltrationLayer, ...]
    total: int
    formula_total: int

    @property
    def match(self) -> bool:
        return self.total == self.formula_total and all(
            layer.dim_l == layer.predicted_l for layer in self.layers
        )

    def to_json_dict(self) -> dict:
        return {
            "m": self.params.m,
            "n": self.params.n,
            "i": self.params.i,
            "p": self.params.field.characteristic,
            "layers": [
                {
                    "j": layer.j,
                    "dim_P": layer.dim_p,
                    "dim_L": layer.dim_l,
                    "predicted_L": layer.predicted_l,
                    "included": layer.included,
                }
                for layer in self.layers
            ],
            "total": self.total,
            "formula_total": self.formula_total,
            "match": self.match,
        }


def filtration_audit(params: InclusionParams, *, memory_budget: int | None = None) -> FiltrationReport:
    """Filter the column space by shadow kernels and audit every layer.

    Starting from P = column space of the (m, i, n) matrix, layer j
    restricts to the intersection of P with the kernels of all shadow
    maps below j and measures the dimension of its j-shadow image.
    Each layer must produce either 0 or the two-row dimension
    C(m,j) - C(m,j-1) according to the divisibility of C(n-j, i-j),
    and the layer dimensions must add up to rank(A) = the formula
    total.  Requires i <= min(n, m-n).
    """
    m, i, n = params.m, params.i, params.n
    p = params.field.characteristic
    if i > m - n:
        raise ParameterError(
            f"filtration needs i <= min(n, m-n); got i={i}, n={n}, m={m} (normalize first)"
        )
    mat = build_inclusion_matrix(params, memory_budget=memory_budget)
    current = column_space_basis(mat)
    dim_p0 = current.dim
    layers = []
    total = 0
    for j in range(i + 1):
        dim_p = current.dim
        shadow = build_inclusion_matrix(
            InclusionParams(m, j, i, params.field), memory_budget=memory_budget
        )
        image = mat_mul(current.matrix, shadow.transpose())
        dim_l = rank_dense(image)
        included = not p_divides_binomial(p, n - j, i - j)
        predicted = specht_dim(m, j) if included else 0
        layers.append(FiltrationLayer(j, dim_p, dim_l, predicted, included))
        total += dim_l
        if j < i:
            current = intersect(current, kernel_basis(shadow))
    for prev, cur in zip(layers, layers[1:]):
        if cur.dim_p > prev.dim_p:
            raise RuntimeError(f"filtration dims increased at layer {cur.j}")
    if total != dim_p0:
        raise RuntimeError(f"layer dims sum to {total}, column space has dim {dim_p0}")
    formula_total = rank_formula(params).total
    return FiltrationReport(params, tuple(layers), total, formula_total)
