import json

import numpy as np
import pytest

from inclurank.combinatorics import binomial, p_divides_binomial, specht_dim
from inclurank.errors import ParameterError
from inclurank.fields import GF2, QQ, FieldSpec
from inclurank.inclusion import InclusionParams, build_inclusion_matrix
from inclurank.linalg import intersect, kernel_basis
from inclurank.specht import (
    FiltrationReport,
    ModuleVector,
    TwoRowTableau,
    check_shadow_on_polytabloid,
    column_shadow_is_zero,
    filtration_audit,
    moved_tableau,
    polytabloid,
    shadow_apply,
    specht_span_rank,
    stabilizer_transpositions,
)

GF3 = FieldSpec(3)
GF5 = FieldSpec(5)


def test_tableau_validation():
    t = TwoRowTableau((3, 4), (1, 2))
    assert t.m == 4 and t.n_full_columns == 2
    long_second = TwoRowTableau((4,), (1, 3, 2))  # second row longer is allowed
    assert long_second.n_full_columns == 1
    with pytest.raises(ParameterError):
        TwoRowTableau((1, 2), (2, 3))
    with pytest.raises(ParameterError):
        TwoRowTableau((1, 2), (4, 5))


def test_stabilizer_examples():
    t = TwoRowTableau((3, 4), (1, 2))
    assert stabilizer_transpositions(t, 2) == [(3, 1), (4, 2)]
    assert stabilizer_transpositions(t, 0) == []
    t2 = TwoRowTableau((2, 5, 6), (1, 3, 4))
    assert stabilizer_transpositions(t2, 1) == [(2, 1)]
    with pytest.raises(ParameterError):
        stabilizer_transpositions(t, 3)


def test_polytabloid_examples():
    t = TwoRowTableau((3, 4), (1, 2))
    # colex order on 2-subsets of [4]: {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}
    assert polytabloid(t, 2, QQ).coeffs.tolist() == [1, 0, -1, -1, 0, 1]
    assert polytabloid(t, 2, GF2).coeffs.tolist() == [1, 0, 1, 1, 0, 1]
    assert polytabloid(t, 0, QQ).coeffs.tolist() == [1, 0, 0, 0, 0, 0]
    assert polytabloid(t, 1, QQ).coeffs.tolist() == [1, 0, -1, 0, 0, 0]
    with pytest.raises(ParameterError):
        polytabloid(t, 3, QQ)


def test_module_vector_validation():
    v = ModuleVector(GF3, 4, 2, [0, 1, 2, 3, 4, 5])
    assert v.coeffs.tolist() == [0, 1, 2, 0, 1, 2]
    assert not v.is_zero()
    assert ModuleVector(QQ, 4, 2, [0] * 6).is_zero()
    with pytest.raises(ParameterError):
        ModuleVector(QQ, 4, 2, [1, 2, 3])


def test_shadow_examples():
    v = ModuleVector(QQ, 4, 2, [1, 0, 0, 0, 0, 0])  # the tabloid {1,2}
    assert shadow_apply(v, 1).coeffs.tolist() == [1, 1, 0, 0]
    assert shadow_apply(v, 2) == v
    assert shadow_apply(v, 0).coeffs.tolist() == [1]
    t = TwoRowTableau((3, 4), (1, 2))
    assert shadow_apply(polytabloid(t, 2, QQ), 1).is_zero()
    with pytest.raises(ParameterError):
        shadow_apply(v, 3)


def test_moved_tableau():
    t = TwoRowTableau((4, 5, 6), (1, 2, 3))
    assert moved_tableau(t, 1) == TwoRowTableau((4, 5, 6, 2, 3), (1,))
    assert moved_tableau(t, 3) == t
    assert moved_tableau(t, 0) == TwoRowTableau((4, 5, 6, 1, 2, 3), ())


def test_check_shadow_examples():
    t = TwoRowTableau((3, 4), (1, 2))
    assert check_shadow_on_polytabloid(t, 2, 1, QQ).passed
    t3 = TwoRowTableau((4, 5, 6), (1, 2, 3))
    res = check_shadow_on_polytabloid(t3, 1, 1, QQ)
    assert res.passed and bool(res)
    want = polytabloid(TwoRowTableau((4, 5, 6, 2, 3), (1,)), 1, QQ)
    assert shadow_apply(polytabloid(t3, 1, QQ), 1) == want
    assert check_shadow_on_polytabloid(t3, 0, 0, QQ).passed
    with pytest.raises(ParameterError):
        check_shadow_on_polytabloid(t3, 1, 2, QQ)


def _shape_tableaux(m, r, rng):
    """A canonical tableau of shape (m-r, r) plus two seeded shuffles."""
    base = list(range(1, m + 1))
    picks = [tuple(base[r:]) + tuple(base[:r])]
    for _ in range(2):
        perm = list(rng.permutation(m) + 1)
        picks.append(tuple(int(x) for x in perm))
    out = []
    for perm in picks:
        out.append(TwoRowTableau(perm[: m - r], perm[m - r :]))
    return out


@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_shadow_identities_every_shape(p):
    field = FieldSpec(p)
    rng = np.random.default_rng(101)
    for m in range(0, 9):
        for r in range(0, m + 1):
            for t in _shape_tableaux(m, r, rng):
                top = t.n_full_columns
                for j in range(0, top + 1):
                    for k in range(0, j + 1):
                        res = check_shadow_on_polytabloid(t, j, k, field)
                        assert res.passed, (m, r, j, k, p, res)


def test_span_rank_examples():
    assert specht_span_rank(4, 1, GF2) == 3
    assert specht_span_rank(4, 0, GF2) == 1
    assert specht_span_rank(4, 0, QQ) == 1
    assert specht_span_rank(6, 3, GF3) == 5
    with pytest.raises(ParameterError):
        specht_span_rank(4, 3, QQ)


@pytest.mark.parametrize("p", [0, 2, 3])
def test_span_rank_full_family_agrees(p):
    field = FieldSpec(p)
    for m in range(0, 7):
        for jj in range(0, m // 2 + 1):
            canonical = specht_span_rank(m, jj, field)
            assert canonical == specht_span_rank(m, jj, field, full_family=True)
            assert canonical == specht_dim(m, jj)


def test_zero_map_iff_divisibility():
    for m in range(0, 8):
        for n in range(m + 1):
            for i in range(n + 1):
                for p in (2, 3, 5):
                    params = InclusionParams(m, i, n, FieldSpec(p))
                    for j in range(i + 1):
                        divides = p_divides_binomial(p, n - j, i - j)
                        assert column_shadow_is_zero(params, j) == divides


def test_filtration_examples():
    rep = filtration_audit(InclusionParams(4, 1, 2, GF2))
    assert [layer.dim_l for layer in rep.layers] == [0, 3]
    assert rep.total == 3 and rep.match
    rep3 = filtration_audit(InclusionParams(4, 1, 2, GF3))
    assert [layer.dim_l for layer in rep3.layers] == [1, 3]
    assert rep3.total == 4 and rep3.match
    rep0 = filtration_audit(InclusionParams(5, 2, 2, QQ))
    assert [layer.dim_l for layer in rep0.layers] == [1, 4, 5]
    assert rep0.total == 10 and rep0.match


def test_filtration_structure():
    for m in range(0, 8):
        for n in range(m + 1):
            for i in range(min(n, m - n) + 1):
                for p in (0, 2, 3):
                    rep = filtration_audit(InclusionParams(m, i, n, FieldSpec(p)))
                    dims = [layer.dim_p for layer in rep.layers]
                    assert dims == sorted(dims, reverse=True)
                    assert rep.layers[0].dim_p == rep.total
                    assert sum(layer.dim_l for layer in rep.layers) == rep.total
                    assert rep.match, (m, i, n, p)


def test_filtration_rejects_unnormalized():
    with pytest.raises(ParameterError):
        filtration_audit(InclusionParams(6, 3, 4, GF2))


def test_filtration_json_contract():
    rep = filtration_audit(InclusionParams(4, 1, 2, GF2))
    doc = json.loads(json.dumps(rep.to_json_dict()))
    assert set(doc) == {"m", "n", "i", "p", "layers", "total", "formula_total", "match"}
    assert doc["m"] == 4 and doc["n"] == 2 and doc["i"] == 1 and doc["p"] == 2
    assert doc["total"] == 3 and doc["formula_total"] == 3 and doc["match"] is True
    for layer in doc["layers"]:
        assert set(layer) == {"j", "dim_P", "dim_L", "predicted_L", "included"}


def test_kernel_intersection_characterization_char0():
    # Over Q the intersection of the low shadow kernels on the i-subset
    # module drops exactly the telescoped hook dimensions: C(m,i) - C(m,j-1).
    for m in range(0, 9):
        for i in range(0, m // 2 + 1):
            current = None
            for j in range(1, i + 1):
                ker = kernel_basis(build_inclusion_matrix(InclusionParams(m, j - 1, i, QQ)))
                current = ker if current is None else intersect(current, ker)
                assert current.dim == binomial(m, i) - binomial(m, j - 1), (m, i, j)


def test_report_type_is_frozen():
    rep = filtration_audit(InclusionParams(4, 1, 2, GF2))
    assert isinstance(rep, FiltrationReport)
    with pytest.raises(AttributeError):
        rep.total = 0
