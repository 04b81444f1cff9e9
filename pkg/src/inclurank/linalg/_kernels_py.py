"""Pure numpy elimination kernels (fallback when the compiled extension is absent).

Both kernels clobber their input buffer and must match the compiled versions
pivot for pivot: first nonzero entry scanning left-to-right, top-to-bottom.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"


def gf2_rank(words: np.ndarray, n_cols: int) -> int:
    """Rank over GF(2) of bit-packed rows (uint64 words, bit c at word c>>6).

    Forward elimination with word-wide XOR; `words` is destroyed.
    """
    n_rows = words.shape[0]
    if n_rows == 0 or n_cols == 0:
        return 0
    rank = 0
    for col in range(n_cols):
        w = col >> 6
        bit = np.uint64(1 << (col & 63))
        hits = np.nonzero(words[rank:, w] & bit)[0]
        if hits.size == 0:
            continue
        piv = rank + int(hits[0])
        if piv != rank:
            words[[rank, piv]] = words[[piv, rank]]
        below = rank + hits[1:]
        if below.size:
            words[below] ^= words[rank]
        rank += 1
        if rank == n_rows:
            break
    return rank


def gfp_rank(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) of an int64 residue matrix (entries in [0, p)).

    Forward elimination; `a` is destroyed.  Requires p < 2**31 so that
    products of two residues fit in int64.
    """
    n_rows, n_cols = a.shape
    if n_rows == 0 or n_cols == 0:
        return 0
    rank = 0
    for col in range(n_cols):
        hits = np.nonzero(a[rank:, col])[0]
        if hits.size == 0:
            continue
        piv = rank + int(hits[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        below = rank + hits[1:]
        if below.size:
            inv = pow(int(a[rank, col]), -1, p)
            f = (a[below, col] * inv) % p
            a[below, col:] = (a[below, col:] - f[:, None] * a[rank, col:]) % p
        rank += 1
        if rank == n_rows:
            break
    return rank
