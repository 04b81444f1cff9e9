"""Field characteristics: 0 (exact rationals) or a prime p (residues mod p).

Only prime fields are needed: the rank of an integer matrix over any field
depends only on the field's characteristic, so GF(p) already covers every
extension field of characteristic p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError

# Odd-prime elimination keeps products of two residues inside int64.
MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (intended for n < 2**31)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field, identified by its characteristic.

    characteristic 0 means exact rational arithmetic; a prime p means GF(p).
    """

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParameterError(f"characteristic must be an integer, got {p!r}")
        if p == 0:
            return
        if p >= MAX_PRIME:
            raise ParameterError(f"prime characteristic must be < 2**31, got {p}")
        if not is_prime(p):
            raise ParameterError(f"characteristic must be 0 or prime, got {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
