import pytest

from flagcodes.cdc import cdc_min_distance, is_max_distance, is_partial_spread, sunflower_center, sunflower_quotient_check
from flagcodes.characterization import check_qodfc_disjoint, check_qodfc_nondisjoint, qodfc_oracle
from flagcodes.constructions import (
    ConstructionError,
    build_c_ell,
    build_flag_variety_line_hyperplane,
    build_max_cdc_high,
    build_qodfc,
    build_qodfc_hyperplane_type,
    build_spread_scaffold,
    build_sunflower,
    truncated_partial_spread,
)
from flagcodes.field import make_field
from flagcodes.flags import TypeVector, flagcode_min_distance, lr_indices, max_flag_distance, projected_subspace_code
from flagcodes.linalg import span_vectors, subspace_from_rows


@pytest.mark.parametrize("q,k,n", [(2, 2, 5), (2, 2, 6), (3, 2, 5), (2, 3, 7), (4, 2, 5)])
def test_scaffold_is_spread(q, k, n):
    F = make_field(q) if q != 4 else make_field(2, 2)
    sc = build_spread_scaffold(F, k, n)
    assert sc.size == q**k + 1
    assert is_partial_spread(truncated_partial_spread(sc, k))
    assert sc.u == span_vectors(F, n, 2 * k + 1).basis[0]
    for j in range(1, k + 1):
        assert is_partial_spread(truncated_partial_spread(sc, j))
    for j in range(1, (n + 1) // 2):
        if j >= k:
            assert is_max_distance(build_max_cdc_high(sc, j))


def test_sunflower_center(F2):
    sc = build_spread_scaffold(F2, 2, 5)
    sf = build_sunflower(sc, 1)
    assert len(sf) == 5 and sf.k == 2
    assert sunflower_center(sf) == subspace_from_rows(F2, 5, [sc.u])
    assert sunflower_quotient_check(sf, sunflower_center(sf))
    with pytest.raises(ConstructionError):
        build_sunflower(sc, 3)


def test_scaffold_rejects_small_n(F2):
    with pytest.raises(ConstructionError):
        build_spread_scaffold(F2, 3, 5)


def test_successor_is_cyclic(F2):
    sc = build_spread_scaffold(F2, 2, 5)
    assert [sc.successor(i) for i in range(sc.size)] == [1, 2, 3, 4, 0]


@pytest.mark.parametrize(
    "q,n,dims",
    [(2, 5, (1, 2, 3, 4)), (2, 5, (2, 3)), (2, 6, (3, 4)), (3, 5, (1, 2, 4)), (2, 7, (1, 3, 4)), (2, 6, (1, 2, 3, 4, 5))],
)
def test_qodfc_construction(q, n, dims):
    F = make_field(q)
    t = TypeVector(n, dims)
    code = build_qodfc(F, t)
    k = (n - 1) // 2
    assert len(code) == q**k + 1
    assert flagcode_min_distance(code) == max_flag_distance(t) - 2
    assert check_qodfc_disjoint(code).verdict is True
    L = lr_indices(t).L
    for i in range(1, t.r + 1):
        d = cdc_min_distance(projected_subspace_code(code, i))
        assert (i == L) == (d < 2 * min(t.t(i), n - t.t(i)))


@pytest.mark.parametrize("q,n,dims", [(2, 6, (1, 2, 3, 4, 5)), (2, 5, (1, 2, 3, 4)), (3, 6, (2, 3, 5))])
def test_c_ell_distance_law(q, n, dims):
    F = make_field(q)
    t = TypeVector(n, dims)
    D = max_flag_distance(t)
    first = build_qodfc(F, t)
    for ell in range(1, lr_indices(t).L + 1):
        code = build_c_ell(F, t, ell)
        assert flagcode_min_distance(code) == D - 2 * ell
        if ell == 1:
            assert code.flags == first.flags
    with pytest.raises(ConstructionError):
        build_c_ell(F, t, lr_indices(t).L + 1)


def test_dual_type_construction(F2):
    t = TypeVector(7, (5, 6))
    code = build_qodfc(F2, t)
    assert "dual" in code.origin
    assert qodfc_oracle(code)


def test_checked_mode_runs(F2):
    assert len(build_qodfc(F2, TypeVector(5, (2, 3)), checked=True)) == 5


@pytest.mark.parametrize("q,n,dims", [(2, 6, (2, 5)), (2, 5, (1, 2, 4)), (3, 5, (2, 4))])
def test_hyperplane_type(q, n, dims):
    F = make_field(q)
    t = TypeVector(n, dims)
    code = build_qodfc_hyperplane_type(F, t)
    assert qodfc_oracle(code)
    assert len(projected_subspace_code(code, t.r)) < len(code)
    assert check_qodfc_nondisjoint(code).verdict is True


def test_hyperplane_type_rejects_bad_type(F2):
    with pytest.raises(ConstructionError):
        build_qodfc_hyperplane_type(F2, TypeVector(6, (2, 3)))


def test_variety_n3(F2):
    code = build_flag_variety_line_hyperplane(F2, 3)
    assert len(code) == 21
    assert flagcode_min_distance(code) == 2
    assert qodfc_oracle(code)


def test_variety_n4_size(F2):
    code = build_flag_variety_line_hyperplane(F2, 4)
    assert len(code) == 15 * 7
