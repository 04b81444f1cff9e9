"""Dense exact matrices over GF(p) or the rationals.

Storage is numpy throughout: int64 residues in [0, p) for prime fields,
object dtype holding Python int / Fraction for characteristic 0.  Floats
are rejected everywhere; every operation is exact.

Matrices are treated as immutable values after construction: no method
mutates `entries`, and the elimination paths work on private copies.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, TextIO

import numpy as np

from ..errors import ParameterError
from ..fields import FieldSpec

__all__ = ["ExactMatrix", "mat_mul", "mat_vec", "pack_gf2_rows"]

# Largest length of an exact int64 dot product of residues mod p, by p.
def _int64_dot_limit(p: int) -> int:
    return (2**63 - 1) // ((p - 1) * (p - 1)) if p > 1 else 2**62


def _as_exact_scalar(x) -> int | Fraction:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return int(x)
    if isinstance(x, Fraction):
        return x
    raise ParameterError(
        f"characteristic-0 entries must be int or Fraction, got {type(x).__name__}"
    )


class ExactMatrix:
    """A dense n_rows x n_cols matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries: np.ndarray, *, _canonical: bool = False):
        self.field = field
        if _canonical:
            self.entries = entries
            return
        arr = np.asarray(entries)
        if arr.ndim != 2:
            raise ParameterError(f"matrix entries must be 2-D, got shape {arr.shape}")
        p = field.characteristic
        if p > 0:
            if arr.dtype == object or np.issubdtype(arr.dtype, np.integer):
                self.entries = arr.astype(np.int64) % p
            else:
                raise ParameterError(f"GF({p}) entries must be integers")
        else:
            out = np.empty(arr.shape, dtype=object)
            flat_in = arr.ravel()
            flat_out = out.ravel()
            for idx in range(flat_in.size):
                flat_out[idx] = _as_exact_scalar(flat_in[idx])
            self.entries = out

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence]) -> ExactMatrix:
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ParameterError("rows have inconsistent lengths")
        if field.characteristic > 0:
            arr = np.array([[int(x) for x in r] for r in rows], dtype=np.int64)
            arr = arr.reshape(n_rows, n_cols)
            return cls(field, arr)
        arr = np.empty((n_rows, n_cols), dtype=object)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                arr[i, j] = _as_exact_scalar(x)
        return cls(field, arr, _canonical=True)

    @classmethod
    def zeros(cls, field: FieldSpec, n_rows: int, n_cols: int) -> ExactMatrix:
        if field.characteristic > 0:
            return cls(field, np.zeros((n_rows, n_cols), dtype=np.int64), _canonical=True)
        arr = np.empty((n_rows, n_cols), dtype=object)
        arr[:] = 0
        return cls(field, arr, _canonical=True)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> ExactMatrix:
        out = cls.zeros(field, n, n)
        for i in range(n):
            out.entries[i, i] = 1
        return out

    # -- basic structure ----------------------------------------------

    @property
    def n_rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n_cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape  # type: ignore[return-value]

    def __getitem__(self, key):
        return self.entries[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ExactMatrix({self.field}, {self.n_rows}x{self.n_cols})"

    def copy(self) -> ExactMatrix:
        return ExactMatrix(self.field, self.entries.copy(), _canonical=True)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.field, self.entries.T.copy(), _canonical=True)

    # -- arithmetic ----------------------------------------------------

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return mat_mul(self, other)

    def mat_vec(self, v) -> np.ndarray:
        return mat_vec(self, v)

    def rank(self, backend: str | None = None) -> int:
        from .elim import rank_dense

        return rank_dense(self, backend=backend)

    # -- text dump format ----------------------------------------------
    # First line "rows cols p", then one whitespace-separated row per line.

    def dump(self, out: TextIO) -> None:
        out.write(f"{self.n_rows} {self.n_cols} {self.field.characteristic}\n")
        for row in self.entries:
            out.write(" ".join(str(x) for x in row))
            out.write("\n")

    @classmethod
    def load(cls, inp: Iterable[str]) -> ExactMatrix:
        lines = iter(inp)
        try:
            header = next(lines).split()
        except StopIteration:
            raise ParameterError("empty matrix dump") from None
        if len(header) != 3:
            raise ParameterError(f"bad dump header {header!r}")
        n_rows, n_cols, p = (int(t) for t in header)
        field = FieldSpec(p)
        rows = []
        for _ in range(n_rows):
            toks = next(lines).split()
            if len(toks) != n_cols:
                raise ParameterError("dump row has wrong width")
            if p > 0:
                rows.append([int(t) for t in toks])
            else:
                rows.append([Fraction(t) if "/" in t else int(t) for t in toks])
        if not rows:
            return cls.zeros(field, n_rows, n_cols)
        return cls.from_rows(field, rows)


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact matrix product; shapes and fields must agree."""
    if a.field != b.field:
        raise ParameterError(f"field mismatch: {a.field} vs {b.field}")
    if a.n_cols != b.n_rows:
        raise ParameterError(f"shape mismatch: {a.shape} @ {b.shape}")
    p = a.field.characteristic
    if p > 0 and a.n_cols <= _int64_dot_limit(p):
        prod = (a.entries @ b.entries) % p
        return ExactMatrix(a.field, prod, _canonical=True)
    # Object-dtype dot: exact arbitrary-precision arithmetic.
    prod = a.entries.astype(object).dot(b.entries.astype(object))
    if p > 0:
        prod = (prod % p).astype(np.int64)
    return ExactMatrix(a.field, prod, _canonical=True)


def mat_vec(mat: ExactMatrix, v) -> np.ndarray:
    """Exact matrix-vector product; returns a canonical coefficient vector."""
    p = mat.field.characteristic
    vec = np.asarray(v, dtype=np.int64 if p > 0 else object)
    if vec.ndim != 1 or vec.shape[0] != mat.n_cols:
        raise ParameterError(f"vector length {vec.shape} does not match {mat.n_cols} columns")
    if p > 0:
        vec = vec % p
        if mat.n_cols <= _int64_dot_limit(p):
            return (mat.entries @ vec) % p
        return ((mat.entries.astype(object) @ vec.astype(object)) % p).astype(np.int64)
    return mat.entries.dot(vec)


def pack_gf2_rows(entries: np.ndarray) -> np.ndarray:
    """Pack a 0/1 int matrix into uint64 words, bit c of a row at word c>>6."""
    n_rows, n_cols = entries.shape
    n_words = (n_cols + 63) >> 6 if n_cols else 1
    words = np.zeros((n_rows, n_words), dtype=np.uint64)
    bits = entries.astype(np.uint64)
    for w in range(n_words):
        chunk = bits[:, 64 * w : 64 * (w + 1)]
        shifts = np.arange(chunk.shape[1], dtype=np.uint64)
        words[:, w] = np.bitwise_or.reduce(chunk << shifts, axis=1)
    return words
