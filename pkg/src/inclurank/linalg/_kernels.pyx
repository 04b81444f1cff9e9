# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels: rank over GF(2) (bit-packed) and GF(p).

Semantics are identical to _kernels_py: same pivot rule (first nonzero
scanning left-to-right, top-to-bottom), input buffers clobbered.
"""

from libc.stdint cimport int64_t, uint64_t

BACKEND_NAME = "compiled"


cdef inline int64_t _mod_inverse(int64_t a, int64_t p):
    # Extended Euclid; a in (0, p), p prime.
    cdef int64_t old_r = a, r = p
    cdef int64_t old_s = 1, s = 0
    cdef int64_t q, tmp
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r; old_r = r; r = tmp
        tmp = old_s - q * s; old_s = s; s = tmp
    if old_s < 0:
        old_s += p
    return old_s


def gf2_rank(uint64_t[:, ::1] words, Py_ssize_t n_cols):
    """Rank over GF(2) of bit-packed rows (uint64 words, bit c at word c>>6)."""
    cdef Py_ssize_t n_rows = words.shape[0]
    cdef Py_ssize_t n_words = words.shape[1]
    cdef Py_ssize_t rank = 0, col, r, w, piv, wi
    cdef uint64_t bit, tmp
    if n_rows == 0 or n_cols == 0:
        return 0
    for col in range(n_cols):
        wi = col >> 6
        bit = (<uint64_t> 1) << (col & 63)
        piv = -1
        for r in range(rank, n_rows):
            if words[r, wi] & bit:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for w in range(n_words):
                tmp = words[piv, w]
                words[piv, w] = words[rank, w]
                words[rank, w] = tmp
        # Rows below the pivot are zero left of `col`, so XOR from wi on.
        for r in range(piv + 1, n_rows):
            if words[r, wi] & bit:
                for w in range(wi, n_words):
                    words[r, w] ^= words[rank, w]
        rank += 1
        if rank == n_rows:
            break
    return rank


def gfp_rank(int64_t[:, ::1] a, int64_t p):
    """Rank over GF(p) of an int64 residue matrix, entries in [0, p), p < 2**31."""
    cdef Py_ssize_t n_rows = a.shape[0]
    cdef Py_ssize_t n_cols = a.shape[1]
    cdef Py_ssize_t rank = 0, col, r, c, piv
    cdef int64_t inv, f, v, tmp
    if n_rows == 0 or n_cols == 0:
        return 0
    for col in range(n_cols):
        piv = -1
        for r in range(rank, n_rows):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(col, n_cols):
                tmp = a[piv, c]
                a[piv, c] = a[rank, c]
                a[rank, c] = tmp
        inv = _mod_inverse(a[rank, col], p)
        for r in range(piv + 1, n_rows):
            f = a[r, col]
            if f == 0:
                continue
            f = (f * inv) % p
            for c in range(col, n_cols):
                v = (a[r, c] - f * a[rank, c]) % p
                if v < 0:
                    v += p
                a[r, c] = v
        rank += 1
        if rank == n_rows:
            break
    return rank
