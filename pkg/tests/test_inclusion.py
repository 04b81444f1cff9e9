import numpy as np
import pytest

from inclurank.combinatorics import Subset, binomial
from inclurank.errors import MemoryBudgetError, ParameterError
from inclurank.fields import GF2, QQ, FieldSpec
from inclurank.inclusion import (
    InclusionParams,
    build_inclusion_matrix,
    column_of,
    composition_identity_holds,
    eliminate_rank,
    normalize_params,
    resolve_memory_budget,
    streaming_rank,
)
from inclurank.linalg import rank_dense
from reference import naive_inclusion_matrix, naive_rank

GF3 = FieldSpec(3)
GF5 = FieldSpec(5)


def test_params_validation():
    with pytest.raises(ParameterError):
        InclusionParams(4, 1, 5, QQ)
    with pytest.raises(ParameterError):
        InclusionParams(4, 3, 2, QQ)
    with pytest.raises(ParameterError):
        InclusionParams(4, -1, 2, QQ)


def test_normalize_examples():
    assert normalize_params(InclusionParams(6, 1, 2, QQ)).transposed is False
    moved = normalize_params(InclusionParams(6, 3, 4, QQ))
    assert moved.transposed is True
    assert (moved.params.i, moved.params.n) == (2, 3)
    boundary = normalize_params(InclusionParams(4, 2, 2, QQ))
    assert boundary.transposed is False
    norm = normalize_params(InclusionParams(9, 5, 7, GF2)).params
    assert norm.i <= min(norm.n, norm.m - norm.n)


def test_build_matches_naive_reference():
    for m in range(0, 7):
        for n in range(m + 1):
            for i in range(n + 1):
                got = build_inclusion_matrix(InclusionParams(m, i, n, GF2)).entries
                assert got.tolist() == naive_inclusion_matrix(m, i, n)


def test_build_trivial_shapes():
    row = build_inclusion_matrix(InclusionParams(6, 0, 3, QQ))
    assert row.shape == (1, 20)
    assert all(x == 1 for x in row.entries.ravel())
    ident = build_inclusion_matrix(InclusionParams(5, 2, 2, GF3))
    assert np.array_equal(ident.entries, np.eye(10, dtype=np.int64))


@pytest.mark.parametrize("m", range(0, 11))
def test_weights_and_transpose_identity(m):
    # Complementation reverses colex order, so the transpose identity
    # holds after reversing both axes; rank is unaffected.
    for n in range(m + 1):
        for i in range(n + 1):
            a = build_inclusion_matrix(InclusionParams(m, i, n, GF2)).entries
            b = build_inclusion_matrix(InclusionParams(m, m - n, m - i, GF2)).entries
            assert np.array_equal(a.T[::-1, ::-1], b)
            if a.size:
                assert (a.sum(axis=0) == binomial(n, i)).all()
                assert (a.sum(axis=1) == binomial(m - i, n - i)).all()


def test_column_of_examples():
    assert column_of(InclusionParams(4, 1, 2, QQ), Subset((1, 2), 4)) == [0, 1]
    assert column_of(InclusionParams(5, 3, 3, QQ), Subset((1, 2, 3), 5)) == [0]
    assert column_of(InclusionParams(4, 2, 3, QQ), Subset((2, 3, 4), 4)) == [2, 4, 5]
    with pytest.raises(ParameterError):
        column_of(InclusionParams(4, 1, 2, QQ), Subset((1, 2, 3), 4))
    with pytest.raises(ParameterError):
        column_of(InclusionParams(4, 1, 2, QQ), Subset((1, 2), 5))


def test_columns_assemble_the_matrix():
    from inclurank.combinatorics import subsets_iter

    params = InclusionParams(6, 2, 4, GF5)
    mat = build_inclusion_matrix(params).entries
    for col, y in enumerate(subsets_iter(6, 4)):
        support = column_of(params, y)
        assert sorted(np.nonzero(mat[:, col])[0].tolist()) == support


def test_streaming_examples():
    assert streaming_rank(InclusionParams(4, 1, 2, GF2)) == 3
    assert streaming_rank(InclusionParams(6, 0, 3, GF5)) == 1
    assert streaming_rank(InclusionParams(5, 2, 2, GF3)) == 10
    with pytest.raises(ParameterError):
        streaming_rank(InclusionParams(4, 1, 2, QQ))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_streaming_equals_dense_up_to_m10(p):
    field = FieldSpec(p)
    for m in range(0, 11):
        for n in range(m + 1):
            for i in range(n + 1):
                params = InclusionParams(m, i, n, field)
                dense = rank_dense(build_inclusion_matrix(params))
                assert streaming_rank(params) == dense, (m, i, n, p)


def test_rank_against_naive_oracle_small():
    for m in range(0, 7):
        for n in range(m + 1):
            for i in range(n + 1):
                ref = naive_inclusion_matrix(m, i, n)
                for p in (0, 2, 3, 5):
                    params = InclusionParams(m, i, n, FieldSpec(p))
                    assert eliminate_rank(params) == naive_rank(ref, p)


def test_composition_identity():
    for m in range(0, 8):
        for n in range(m + 1):
            for i in range(n + 1):
                for j in range(i + 1):
                    assert composition_identity_holds(m, j, i, n)
    with pytest.raises(ParameterError):
        composition_identity_holds(4, 2, 1, 3)


def test_memory_budget():
    params = InclusionParams(12, 6, 6, QQ)
    with pytest.raises(MemoryBudgetError) as exc:
        build_inclusion_matrix(params, memory_budget=1000)
    assert exc.value.needed == 924 * 924 * 8
    assert exc.value.budget == 1000
    with pytest.raises(MemoryBudgetError):
        eliminate_rank(params, memory_budget=1000)  # p = 0 cannot stream
    gf = InclusionParams(12, 2, 6, GF2)
    streamed = eliminate_rank(gf, memory_budget=1000, allow_streaming=True)
    assert streamed == eliminate_rank(gf)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("INCLURANK_MEMORY_BUDGET", "12345")
    assert resolve_memory_budget() == 12345
    assert resolve_memory_budget(99) == 99
    monkeypatch.setenv("INCLURANK_MEMORY_BUDGET", "not-a-number")
    with pytest.raises(ParameterError):
        resolve_memory_budget()


def test_entries_are_shared_and_read_only():
    a = build_inclusion_matrix(InclusionParams(5, 1, 2, GF2))
    b = build_inclusion_matrix(InclusionParams(5, 1, 2, GF3))
    assert a.entries is b.entries  # one cached array serves every prime
    with pytest.raises(ValueError):
        a.entries[0, 0] = 1
