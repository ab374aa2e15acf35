import json
import random

import pytest
from hypothesis import given, strategies as st

from flagcodes.cdc import CodeError
from flagcodes.characterization import (
    bound_case_for_route,
    certify_qodfc,
    check_dminus4,
    check_qodfc_disjoint,
    check_qodfc_nondisjoint,
    dminus4_oracle,
    nonmax_propagation_check,
    qodfc_cardinality_bound,
    qodfc_oracle,
)
from flagcodes.constructions import build_flag_variety_line_hyperplane, build_spread_scaffold
from flagcodes.field import make_field
from flagcodes.flags import Flag, FlagCode, TypeVector, dual_flag_code, flagcode_min_distance, max_flag_distance
from flagcodes.linalg import span_vectors
from flagcodes.sampling import random_flag, random_flag_code, random_flag_sharing
from flagcodes.worked_examples import FIVE_FLAG_SUBCODES, five_flags_n6, qodfc_examples_n5

GOLDEN_CASE3 = {
    "verdict": True,
    "route": "disjoint/case3",
    "projected_distances": [2, 2, 2],
    "collapse_dims": [],
    "witnesses": [{"flags": [0, 1], "reason": "closest pair of the central projection", "distance": 8, "components": [2, 2, 4]}],
    "bounds": {"case": "disjoint", "expression": "min{floor((q^5-1)/(q^1-1))}", "value": 31, "ceiling": 31, "satisfied": True},
    "details": {
        "L": 2,
        "R": 3,
        "max_distance_at_1": True,
        "central_type": [2, 3],
        "central_distance": 6,
        "central_max": 8,
        "distinguished_type": [1, 2, 3],
        "distinguished_distance": 8,
        "distinguished_is_qodfc": True,
        "structural_route": True,
        "dualized": False,
    },
}


def flag(F, n, *chains):
    t = TypeVector(n, tuple(len(c) for c in chains))
    return Flag(t, tuple(span_vectors(F, n, *c) for c in chains))


@pytest.mark.parametrize("q", [2, 3])
def test_example_n5_routes(q):
    codes = qodfc_examples_n5(make_field(q))
    expected = {"C": ("disjoint/case1", [2, 2, 4]), "C'": ("disjoint/case2", [2, 4, 2]), "C''": ("disjoint/case3", [2, 2, 2])}
    for name, code in codes.items():
        assert qodfc_oracle(code)
        cert = check_qodfc_disjoint(code)
        assert cert.verdict is True
        assert (cert.route, cert.projected_distances) == expected[name]


def test_certificate_golden_json(F2):
    cert = certify_qodfc(qodfc_examples_n5(F2)["C''"])
    data = cert.to_json()
    assert list(data) == ["verdict", "route", "projected_distances", "collapse_dims", "witnesses", "bounds", "details"]
    assert json.dumps(data) == json.dumps(GOLDEN_CASE3)


def test_singleton_is_undefined(F2):
    code = FlagCode.of(five_flags_n6(F2)[:1])
    with pytest.raises(CodeError):
        qodfc_oracle(code)
    with pytest.raises(CodeError):
        dminus4_oracle(code)
    assert certify_qodfc(code).verdict is None
    assert certify_qodfc(code).route == "undefined (singleton)"
    assert check_dminus4(code).verdict is None


def test_optimum_code_is_not_qodfc(F2):
    sc = build_spread_scaffold(F2, 2, 4)
    t = TypeVector(4, (2,))
    code = FlagCode.of(Flag(t, (sc.member(i),)) for i in range(sc.size))
    assert flagcode_min_distance(code) == max_flag_distance(t)
    assert not qodfc_oracle(code)
    assert certify_qodfc(code).verdict is False


def test_checkers_reject_wrong_structure(F2):
    disjoint = qodfc_examples_n5(F2)["C"]
    with pytest.raises(CodeError):
        check_qodfc_nondisjoint(disjoint)
    collapsed = FlagCode.of(five_flags_n6(F2)[:2])
    with pytest.raises(CodeError):
        check_qodfc_disjoint(collapsed)


def test_collapse_at_dim_two_is_not_qodfc(F2):
    code = FlagCode.of([flag(F2, 6, (1, 2), (1, 2, 3)), flag(F2, 6, (1, 2), (1, 2, 4))])
    cert = check_qodfc_nondisjoint(code)
    assert cert.verdict is False and cert.collapse_dims == [2]
    assert not qodfc_oracle(code)


def test_variety_n3_clause3(F2):
    code = build_flag_variety_line_hyperplane(F2, 3)
    cert = check_qodfc_nondisjoint(code)
    assert cert.verdict is True
    assert 3 in cert.details["matched_clauses"]
    assert cert.details["clause3_quantifier"] == "all"
    assert cert.bounds["value"] == 21


def test_pair_in_variety_type_uses_some_quantifier(F2):
    code = FlagCode.of([flag(F2, 3, (1,), (1, 2)), flag(F2, 3, (1,), (1, 3))])
    cert = certify_qodfc(code)
    assert cert.verdict is True
    assert cert.details["clause3_quantifier"] == "some"
    assert cert.details["matched_clauses"] == [1, 3]


def test_five_flag_code_dminus4(F2):
    code = FlagCode.of(five_flags_n6(F2))
    cert = check_dminus4(code)
    assert cert.verdict is True and dminus4_oracle(code)
    assert cert.collapse_dims == [1, 2, 4, 5]
    assert cert.details["collapses_within_extremes"]


@pytest.mark.parametrize("members", sorted(FIVE_FLAG_SUBCODES))
def test_five_flag_subcodes_dminus4(F2, members):
    flags = five_flags_n6(F2)
    code = FlagCode.of(flags[i - 1] for i in members)
    assert dminus4_oracle(code)
    assert check_dminus4(code).verdict is True


def test_example_n5_not_dminus4(F2):
    for code in qodfc_examples_n5(F2).values():
        assert not dminus4_oracle(code)
        assert check_dminus4(code).verdict is False


def test_propagation_examples(F2):
    f = five_flags_n6(F2)
    rep = nonmax_propagation_check(f[0], f[2])
    assert rep.is_max == (True, False, False, True) and rep.holds
    rep = nonmax_propagation_check(f[0], f[3])
    assert rep.is_max == (True, True, True, True) and rep.holds


def test_propagation_type_mismatch(F2):
    from flagcodes.flags import FlagError

    with pytest.raises(FlagError):
        nonmax_propagation_check(flag(F2, 3, (1,)), flag(F2, 3, (1, 2)))


def test_bounds_frozen():
    b = qodfc_cardinality_bound(TypeVector(10, (2, 4, 6, 8)), 2, "disjoint")
    assert (b.value, b.alternative) == (341, 4)
    assert qodfc_cardinality_bound(TypeVector(3, (1, 2)), 2, "nondisjoint-variety").value == 21
    sym = qodfc_cardinality_bound(TypeVector(6, (2, 4)), 2, "disjoint")
    assert sym.value is None and sym.expression == "min{A_q(6, 2, 2), A_q(6, 4, 2)}"
    assert qodfc_cardinality_bound(TypeVector(5, (1, 3, 4)), 2, "nondisjoint-line").value == 31
    assert qodfc_cardinality_bound(TypeVector(6, (1, 2, 5)), 3, "nondisjoint-hyperplane").value == (3**6 - 1) // 2
    with pytest.raises(CodeError):
        qodfc_cardinality_bound(TypeVector(6, (2, 3)), 2, "nondisjoint-variety")
    with pytest.raises(CodeError):
        qodfc_cardinality_bound(TypeVector(6, (2, 3)), 2, "bogus")


def test_bound_case_routes():
    assert bound_case_for_route("disjoint/case2") == "disjoint"
    assert bound_case_for_route("disjoint/not-qodfc") is None
    assert bound_case_for_route("non-disjoint/clause3") == "nondisjoint-variety"


def test_dualized_certificate_matches_direct(F2):
    rng = random.Random(3)
    t = TypeVector(6, (4, 5))
    for _ in range(30):
        code = random_flag_code(F2, t, rng.randint(2, 4), rng, share_prob=0.5)
        auto, direct = certify_qodfc(code), certify_qodfc(code, auto_dualize=False)
        assert auto.details["dualized"] and auto.verdict == direct.verdict == qodfc_oracle(code)
        assert auto.projected_distances == direct.projected_distances
        assert auto.collapse_dims == direct.collapse_dims
        d4 = check_dminus4(code)
        assert d4.verdict == check_dminus4(code, auto_dualize=False).verdict == dminus4_oracle(code)


RANDOM_TYPES = [
    TypeVector(5, (1, 2, 3)),
    TypeVector(5, (1, 2, 3, 4)),
    TypeVector(6, (1, 2, 4, 5)),
    TypeVector(5, (2, 3)),
    TypeVector(4, (1, 3)),
    TypeVector(5, (1, 4)),
    TypeVector(6, (1, 3, 5)),
    TypeVector(5, (1, 2, 4)),
]


@given(st.sampled_from(RANDOM_TYPES), st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_random_codes_checkers_match_oracles(t, size, seed):
    F = make_field(2)
    rng = random.Random(seed)
    code = random_flag_code(F, t, size, rng, share_prob=0.6)
    assert certify_qodfc(code).verdict == qodfc_oracle(code)
    assert check_dminus4(code).verdict == dminus4_oracle(code)


@given(st.sampled_from(RANDOM_TYPES), st.integers(0, 2**32 - 1))
def test_random_pairs_collapse_restrictions(t, seed):
    F = make_field(2)
    rng = random.Random(seed)
    a = random_flag(F, t, rng)
    b = random_flag_sharing(a, rng.randint(1, t.r), rng)
    if a == b:
        return
    code = FlagCode.of([a, b])
    n = t.n
    if qodfc_oracle(code):
        assert set(certify_qodfc(code).collapse_dims) <= {1, n - 1}
    if dminus4_oracle(code):
        cert = check_dminus4(code)
        assert set(cert.collapse_dims) <= {1, 2, n - 2, n - 1}
        if t.r >= 3:
            assert not cert.details["line_and_hyperplane_collapses"]
    assert nonmax_propagation_check(a, b).holds


def test_duality_preserves_verdicts(F2):
    rng = random.Random(11)
    for t in RANDOM_TYPES:
        code = random_flag_code(F2, t, 3, rng, share_prob=0.5)
        dual = dual_flag_code(code)
        assert certify_qodfc(dual).verdict == certify_qodfc(code).verdict
        assert check_dminus4(dual).verdict == check_dminus4(code).verdict
