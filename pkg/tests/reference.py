"""Independent naive reference implementations used as oracles.

Everything here is deliberately primitive: plain lists, textbook
elimination, subset enumeration by sorting.  Nothing imports the
package under test, so agreement between these and the library is
evidence, not circularity.
"""

from fractions import Fraction
from itertools import combinations


def naive_rank(rows, p):
    """Row-reduce a list-of-lists matrix and count pivots.

    p = 0 works in Fractions, p > 0 in residues with pow(-1) inverses.
    """
    if p == 0:
        mat = [[Fraction(x) for x in row] for row in rows]
    else:
        mat = [[int(x) % p for x in row] for row in rows]
    n_rows = len(mat)
    n_cols = len(mat[0]) if n_rows else 0
    rank = 0
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        lead = mat[rank][col]
        inv = 1 / lead if p == 0 else pow(lead, -1, p)
        for r in range(rank + 1, n_rows):
            f = mat[r][col] * inv
            if f == 0:
                continue
            if p == 0:
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
            else:
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def naive_colex_subsets(m, k):
    """All k-subsets of {1..m}, ordered by comparing largest elements first."""
    return sorted(combinations(range(1, m + 1), k), key=lambda s: tuple(reversed(s)))


def naive_inclusion_matrix(m, i, n):
    """The (m, i, n) inclusion matrix as a list of 0/1 lists."""
    row_sets = naive_colex_subsets(m, i)
    col_sets = naive_colex_subsets(m, n)
    return [[1 if set(x) <= set(y) else 0 for y in col_sets] for x in row_sets]
