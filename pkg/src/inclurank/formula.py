"""Closed-form rank of inclusion matrices, with per-term breakdowns.

Over a field of characteristic p, the rank of the (m, i, n) inclusion
matrix with i <= min(n, m-n) is

    sum over j in 0..i with p not dividing C(n-j, i-j) of
        C(m, j) - C(m, j-1)

(for p = 0 nothing is excluded and the sum telescopes to C(m, i), full
row rank).  Parameters outside the hypothesis are first normalized
through the transpose identity, which preserves rank.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .combinatorics import binomial, p_divides_binomial
from .errors import ParameterError
from .fields import FieldSpec
from .inclusion import (
    InclusionParams,
    NormalizedParams,
    eliminate_rank,
    normalize_params,
)

__all__ = [
    "RankTerm",
    "RankBreakdown",
    "rank_formula",
    "SweepCase",
    "sweep_cases",
    "rank_table",
    "format_cases",
]


@dataclass(frozen=True)
class RankTerm:
    """One summand of the formula: layer j contributes value if included."""

    j: int
    included: bool
    value: int


@dataclass(frozen=True)
class RankBreakdown:
    """Formula evaluation with the raw and normalized parameter triples."""

    raw: InclusionParams
    normalized: NormalizedParams
    terms: tuple[RankTerm, ...]
    total: int


def rank_formula(raw: InclusionParams) -> RankBreakdown:
    """Evaluate the closed form on normalized parameters.

    The j-th term is the two-row hook dimension C(m,j) - C(m,j-1),
    included exactly when p does not divide C(n-j, i-j); j runs over
    0..i inclusive, and the top layer j = i is always included since
    C(n-i, 0) = 1.
    """
    norm = normalize_params(raw)
    m, i, n = norm.params.m, norm.params.i, norm.params.n
    p = raw.field.characteristic
    terms = []
    total = 0
    for j in range(i + 1):
        included = not p_divides_binomial(p, n - j, i - j)
        value = binomial(m, j) - binomial(m, j - 1)
        if included:
            total += value
        terms.append(RankTerm(j, included, value))
    return RankBreakdown(raw, norm, tuple(terms), total)


@dataclass(frozen=True)
class SweepCase:
    """One (m, n, i, p) comparison row; oracle is None when not computed."""

    m: int
    n: int
    i: int
    p: int
    formula: int
    oracle: int | None
    breakdown: RankBreakdown

    @property
    def match(self) -> bool | None:
        if self.oracle is None:
            return None
        return self.oracle == self.formula


def _pair_iter(m: int, pairs: str) -> Iterator[tuple[int, int]]:
    for n in range(m + 1):
        for i in range(n + 1):
            if pairs == "all" or i <= m - n:
                yield n, i


def sweep_cases(
    m_values: Sequence[int],
    characteristics: Sequence[int],
    *,
    pairs: str = "all",
    include_oracle: bool = False,
    memory_budget: int | None = None,
    backend: str | None = None,
    allow_streaming: bool = True,
    inject_fault: bool = False,
) -> Iterator[SweepCase]:
    """Formula (and optionally oracle) ranks in deterministic sweep order.

    Order is m, then n, then i ascending, then the characteristics in
    the order given; `pairs` is "all" for every 0 <= i <= n <= m or
    "normalized" to restrict to i <= min(n, m-n).  `inject_fault` flips
    the j = 0 term of every case (test harness self-check only).
    """
    if pairs not in ("all", "normalized"):
        raise ParameterError(f"pairs must be 'all' or 'normalized', got {pairs!r}")
    fields = [FieldSpec(p) for p in characteristics]
    for m in m_values:
        if m < 0:
            raise ParameterError(f"m must be >= 0, got {m}")
        for n, i in _pair_iter(m, pairs):
            for field in fields:
                params = InclusionParams(m, i, n, field)
                breakdown = rank_formula(params)
                formula = breakdown.total
                if inject_fault:
                    formula += -1 if breakdown.terms[0].included else 1
                oracle = None
                if include_oracle:
                    oracle = eliminate_rank(
                        params,
                        memory_budget=memory_budget,
                        backend=backend,
                        allow_streaming=allow_streaming,
                    )
                yield SweepCase(m, n, i, field.characteristic, formula, oracle, breakdown)


CSV_HEADER = "m,n,i,p,formula_rank,oracle_rank,match"


def _csv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def format_cases(cases: Iterable[SweepCase], fmt: str) -> str:
    """Render sweep rows as a csv, json, or md document (byte-stable)."""
    rows = list(cases)
    if fmt == "csv":
        lines = [CSV_HEADER]
        for c in rows:
            lines.append(
                ",".join(_csv_cell(x) for x in (c.m, c.n, c.i, c.p, c.formula, c.oracle, c.match))
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = []
        for c in rows:
            payload.append(
                {
                    "m": c.m,
                    "n": c.n,
                    "i": c.i,
                    "p": c.p,
                    "formula_rank": c.formula,
                    "oracle_rank": c.oracle,
                    "match": c.match,
                    "terms": [
                        {"j": t.j, "included": t.included, "value": t.value}
                        for t in c.breakdown.terms
                    ],
                }
            )
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "md":
        lines = [
            "| m | n | i | p | formula_rank | oracle_rank | match |",
            "| - | - | - | - | - | - | - |",
        ]
        for c in rows:
            cells = (c.m, c.n, c.i, c.p, c.formula, c.oracle, c.match)
            lines.append("| " + " | ".join(_csv_cell(x) for x in cells) + " |")
        return "\n".join(lines) + "\n"
    raise ParameterError(f"unknown table format {fmt!r}")


def rank_table(
    characteristic: int,
    m_values: Sequence[int],
    *,
    pairs: str = "all",
    fmt: str = "csv",
    include_oracle: bool = False,
    memory_budget: int | None = None,
    backend: str | None = None,
) -> str:
    """Table document of formula ranks (plus oracle columns on request)."""
    cases = sweep_cases(
        m_values,
        [characteristic],
        pairs=pairs,
        include_oracle=include_oracle,
        memory_budget=memory_budget,
        backend=backend,
    )
    return format_cases(cases, fmt)
