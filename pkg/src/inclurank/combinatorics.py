"""Subset indexing and exact binomial arithmetic.

Every matrix in this package is indexed by k-element subsets of
[m] = {1, ..., m} in colexicographic order (compare largest elements
first).  The rank/unrank maps here fix that order once and for all;
nothing else in the package is allowed to invent its own subset order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ParameterError


def binomial(a: int, b: int) -> int:
    """C(a, b) as an exact integer, with C(a, b) = 0 for b < 0 or b > a."""
    if a < 0:
        raise ParameterError(f"binomial needs a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class Subset:
    """A k-element subset of [m], stored as a strictly increasing tuple."""

    elements: tuple[int, ...]
    m: int

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if self.m < 0:
            raise ParameterError(f"ground-set size must be >= 0, got {self.m}")
        prev = 0
        for e in elems:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ParameterError(f"subset elements must be integers, got {e!r}")
            if e <= prev:
                raise ParameterError(
                    f"subset elements must be strictly increasing in [1, m], got {elems}"
                )
            prev = e
        if prev > self.m:
            raise ParameterError(f"element {prev} outside ground set [1, {self.m}]")

    @property
    def k(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SubsetIndex:
    """Colexicographic position of a k-subset among all k-subsets of [m]."""

    rank: int
    k: int
    m: int

    def __post_init__(self):
        if not 0 <= self.k <= self.m:
            raise ParameterError(f"need 0 <= k <= m, got k={self.k}, m={self.m}")
        if not 0 <= self.rank < binomial(self.m, self.k):
            raise ParameterError(
                f"rank {self.rank} out of range for C({self.m},{self.k})"
            )


def colex_rank(elements: Sequence[int]) -> int:
    """Colex rank of a strictly increasing element tuple (no validation)."""
    r = 0
    for t, e in enumerate(elements, start=1):
        r += math.comb(e - 1, t)
    return r


def subset_rank(s: Subset) -> SubsetIndex:
    """Colexicographic rank of a subset; inverse of :func:`subset_unrank`."""
    return SubsetIndex(rank=colex_rank(s.elements), k=s.k, m=s.m)


def subset_unrank(idx: SubsetIndex) -> Subset:
    """Subset at a given colexicographic rank."""
    r = idx.rank
    elems = [0] * idx.k
    for t in range(idx.k, 0, -1):
        # Largest e with C(e - 1, t) <= r; e - 1 >= t - 1 always holds.
        e = t
        while math.comb(e, t) <= r:
            e += 1
        elems[t - 1] = e
        r -= math.comb(e - 1, t)
    return Subset(tuple(elems), idx.m)


def subsets_iter(m: int, k: int) -> Iterator[Subset]:
    """All k-subsets of [m] in colexicographic order (rank 0, 1, 2, ...)."""
    if not 0 <= k <= m:
        raise ParameterError(f"need 0 <= k <= m, got k={k}, m={m}")
    cur = list(range(1, k + 1))
    while True:
        yield Subset(tuple(cur), m)
        t = 0
        while t < k and cur[t] + 1 == (cur[t + 1] if t + 1 < k else m + 1):
            t += 1
        if t == k:
            return
        cur[t] += 1
        for s in range(t):
            cur[s] = s + 1


def p_divides_binomial(p: int, a: int, b: int) -> bool:
    """Whether p divides C(a, b), decided digit-wise in base p.

    p = 0 always returns False (characteristic-0 convention).  The test
    never forms C(a, b): it compares base-p digits of b against a
    (Lucas' theorem), so it costs O(log_p a).
    """
    if not 0 <= b <= a:
        raise ParameterError(f"need 0 <= b <= a, got a={a}, b={b}")
    if p == 0:
        return False
    from .fields import is_prime  # local import: fields imports errors only

    if not is_prime(p):
        raise ParameterError(f"characteristic must be 0 or prime, got {p}")
    while b:
        if b % p > a % p:
            return True
        a //= p
        b //= p
    return False


def specht_dim(m: int, j: int) -> int:
    """C(m, j) - C(m, j-1): the two-row hook-formula dimension for shape (m-j, j)."""
    if not 0 <= 2 * j <= m:
        raise ParameterError(f"need 0 <= j <= m/2, got j={j}, m={m}")
    return binomial(m, j) - binomial(m, j - 1)
