"""Exact elimination: rank, reduced echelon form, and subspace operations.

Rank over a prime field dispatches to the selected kernel backend
(compiled if available, numpy otherwise); rank over the rationals uses
fraction-free Bareiss elimination on Python integers.

All pivot searches scan for the first nonzero entry left to right, top
to bottom, so reduced forms are canonical and comparable across runs
and backends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import ParameterError
from ..fields import FieldSpec
from .backend import get_backend
from .matrix import ExactMatrix, pack_gf2_rows

__all__ = [
    "rank_dense",
    "bareiss_rank",
    "rref",
    "SubspaceBasis",
    "row_space_basis",
    "column_space_basis",
    "kernel_basis",
    "intersect",
]


def rank_dense(mat: ExactMatrix, backend: str | None = None) -> int:
    """Rank of `mat` over its field."""
    if mat.n_rows == 0 or mat.n_cols == 0:
        return 0
    p = mat.field.characteristic
    if p == 0:
        return bareiss_rank(mat.entries)
    kern = get_backend(backend)
    if p == 2:
        words = pack_gf2_rows(mat.entries)
        return int(kern.gf2_rank(words, mat.n_cols))
    return int(kern.gfp_rank(mat.entries.copy(), p))


def _integer_rows(entries: np.ndarray) -> np.ndarray:
    """Rescale each row to Python ints (row scaling preserves rank)."""
    n_rows, n_cols = entries.shape
    out = np.empty((n_rows, n_cols), dtype=object)
    for i in range(n_rows):
        row = entries[i]
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        for j, x in enumerate(row):
            if isinstance(x, Fraction):
                out[i, j] = (x * den).numerator
            else:
                out[i, j] = int(x) * den
    return out


def bareiss_rank(entries: np.ndarray) -> int:
    """Rank over the rationals by fraction-free Bareiss elimination.

    Intermediate entries are minors of the (row-rescaled) integer
    matrix, so every division below is exact integer division.
    """
    n_rows, n_cols = entries.shape
    if n_rows == 0 or n_cols == 0:
        return 0
    a = _integer_rows(entries)
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = -1
        for r in range(rank, n_rows):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        pv = a[rank, col]
        if rank + 1 < n_rows:
            f = a[rank + 1 :, col]
            live = np.nonzero(f)[0]
            if pv != prev or live.size:
                sub = a[rank + 1 :, col + 1 :]
                a[rank + 1 :, col + 1 :] = (pv * sub - np.outer(f, a[rank, col + 1 :])) // prev
            a[rank + 1 :, col] = 0
        prev = pv
        rank += 1
    return rank


def _rref_modp(entries: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    a = entries % p
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        hits = np.nonzero(a[rank:, col])[0]
        if hits.size == 0:
            continue
        piv = rank + int(hits[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            f = a[others, col][:, None]
            a[others, col:] = (a[others, col:] - f * a[rank, col:]) % p
        pivots.append(col)
        rank += 1
    return a, tuple(pivots)


def _rref_char0(entries: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    a = np.empty(entries.shape, dtype=object)
    src = entries.ravel()
    dst = a.ravel()
    for idx in range(src.size):
        dst[idx] = Fraction(src[idx])
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = -1
        for r in range(rank, n_rows):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank, col:] = a[rank, col:] / a[rank, col]
        others = [r for r in range(n_rows) if r != rank and a[r, col] != 0]
        if others:
            f = a[others, col]
            a[others, col:] = a[others, col:] - np.outer(f, a[rank, col:])
        pivots.append(col)
        rank += 1
    return a, tuple(pivots)


def rref(mat: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    p = mat.field.characteristic
    if p > 0:
        reduced, pivots = _rref_modp(mat.entries, p)
    else:
        reduced, pivots = _rref_char0(mat.entries)
    return ExactMatrix(mat.field, reduced, _canonical=True), pivots


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subspace of F^ambient_dim given by its canonical RREF row basis."""

    field: FieldSpec
    ambient_dim: int
    matrix: ExactMatrix
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.matrix.n_rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.matrix == other.matrix
        )

    def contains(self, vec) -> bool:
        """Membership test by reduction against the RREF rows."""
        p = self.field.characteristic
        if p > 0:
            v = np.asarray(vec, dtype=np.int64) % p
        else:
            vals = [Fraction(x) for x in vec]
            v = np.empty(len(vals), dtype=object)
            v[:] = vals
        if v.ndim != 1 or v.shape[0] != self.ambient_dim:
            raise ParameterError(f"vector length {v.shape[0]} != ambient {self.ambient_dim}")
        for row, col in zip(self.matrix.entries, self.pivots):
            f = v[col]
            if f != 0:
                v = (v - f * row) % p if p > 0 else v - f * row
        return not np.any(v != 0)


def row_space_basis(mat: ExactMatrix) -> SubspaceBasis:
    reduced, pivots = rref(mat)
    basis = ExactMatrix(mat.field, reduced.entries[: len(pivots)].copy(), _canonical=True)
    return SubspaceBasis(mat.field, mat.n_cols, basis, pivots)


def column_space_basis(mat: ExactMatrix) -> SubspaceBasis:
    """Column space of `mat`, as a subspace of F^n_rows."""
    return row_space_basis(mat.transpose())


def kernel_basis(mat: ExactMatrix) -> SubspaceBasis:
    """Right null space {x : mat @ x = 0}, as a subspace of F^n_cols."""
    reduced, pivots = rref(mat)
    n_cols = mat.n_cols
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    vecs = ExactMatrix.zeros(mat.field, len(free), n_cols)
    p = mat.field.characteristic
    for k, fcol in enumerate(free):
        vecs.entries[k, fcol] = 1
        for r, pcol in enumerate(pivots):
            coeff = reduced.entries[r, fcol]
            if coeff != 0:
                vecs.entries[k, pcol] = (-coeff) % p if p > 0 else -coeff
    return row_space_basis(vecs)


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Intersection of two subspaces by the Zassenhaus block construction."""
    if a.field != b.field:
        raise ParameterError(f"field mismatch: {a.field} vs {b.field}")
    if a.ambient_dim != b.ambient_dim:
        raise ParameterError(f"ambient mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        empty = ExactMatrix.zeros(a.field, 0, n)
        return SubspaceBasis(a.field, n, empty, ())
    zero = ExactMatrix.zeros(a.field, b.dim, n).entries
    top = np.hstack([a.matrix.entries, a.matrix.entries])
    bot = np.hstack([b.matrix.entries, zero])
    block = ExactMatrix(a.field, np.vstack([top, bot]), _canonical=True)
    reduced, pivots = rref(block)
    keep = [r for r, pv in enumerate(pivots) if pv >= n]
    inner = ExactMatrix(a.field, reduced.entries[keep, n:].copy(), _canonical=True)
    return row_space_basis(inner)
