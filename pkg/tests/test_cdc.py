import pytest

from flagcodes.cdc import (
    CodeError,
    ConstantDimensionCode,
    EnumerationCapExceeded,
    cdc_min_distance,
    dual_cdc,
    enumerate_grassmannian,
    gaussian_binomial,
    is_max_distance,
    is_partial_spread,
    max_subspace_distance,
    partial_spread_bound,
    sunflower_center,
    sunflower_quotient_check,
    sunflower_violation,
)
from flagcodes.field import make_field
from flagcodes.linalg import span_vectors, subspace_from_rows


def code(F, n, *spans):
    return ConstantDimensionCode.of([span_vectors(F, n, *s) for s in spans])


def test_gaussian_binomials_frozen():
    assert gaussian_binomial(2, 4, 2) == 35
    assert gaussian_binomial(2, 3, 1) == 7
    assert gaussian_binomial(3, 4, 2) == 130
    assert gaussian_binomial(2, 5, 0) == 1


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (2, 5, 2), (3, 3, 1), (3, 4, 2), (4, 3, 1), (2, 6, 3)])
def test_grassmannian_count(q, n, k):
    p, m = {2: (2, 1), 3: (3, 1), 4: (2, 2)}[q]
    F = make_field(p, m)
    subs = enumerate_grassmannian(F, n, k)
    assert len(subs) == len(set(subs)) == gaussian_binomial(q, n, k)
    assert all(s.dim == k for s in subs)


def test_grassmannian_cap(F2):
    with pytest.raises(EnumerationCapExceeded):
        enumerate_grassmannian(F2, 6, 3, cap=100)


def test_min_distance_and_singleton(F2):
    c = code(F2, 4, (1, 2), (3, 4), (1, 3))
    assert cdc_min_distance(c) == 2
    assert cdc_min_distance(code(F2, 4, (1, 2))) == 0
    with pytest.raises(CodeError):
        cdc_min_distance(ConstantDimensionCode.of([], field=F2, n=4, k=2))


def test_dimension_mismatch(F2):
    with pytest.raises(CodeError):
        ConstantDimensionCode.of([span_vectors(F2, 4, 1), span_vectors(F2, 4, 1, 2)])


def test_partial_spread_and_max_distance(F2):
    spread = code(F2, 4, (1, 2), (3, 4))
    assert is_partial_spread(spread) and is_max_distance(spread)
    assert not is_partial_spread(code(F2, 4, (1, 2), (2, 3)))
    high = code(F2, 4, (1, 2, 3), (2, 3, 4))
    assert is_max_distance(high) and not is_partial_spread(high)
    assert not is_max_distance(code(F2, 5, (1, 2, 3), (1, 2, 4)))
    assert max_subspace_distance(6, 4) == 4


def test_partial_spread_bound():
    assert partial_spread_bound(2, 4, 2) == (5, True)
    assert partial_spread_bound(2, 5, 2) == (10, False)


def test_sunflower(F2):
    sf = code(F2, 5, (1, 5), (2, 5), (3, 5))
    assert sunflower_center(sf) == span_vectors(F2, 5, 5)
    assert sunflower_quotient_check(sf, span_vectors(F2, 5, 5))
    not_sf = code(F2, 5, (1, 5), (2, 5), (1, 2))
    assert sunflower_center(not_sf) is None
    assert sunflower_violation(not_sf) is not None
    with pytest.raises(CodeError):
        sunflower_quotient_check(not_sf, span_vectors(F2, 5, 5))
    with pytest.raises(CodeError):
        sunflower_violation(code(F2, 5, (1, 5)))


def test_partial_spread_is_sunflower_with_zero_center(F2):
    c = code(F2, 4, (1, 2), (3, 4))
    assert sunflower_center(c).dim == 0


def test_dual_preserves_distance(F3):
    c = ConstantDimensionCode.of(enumerate_grassmannian(F3, 4, 2)[:12])
    d = dual_cdc(c)
    assert d.k == 2 and len(d) == len(c)
    assert cdc_min_distance(d) == cdc_min_distance(c)
    assert dual_cdc(d) == c


def test_membership(F2):
    c = code(F2, 4, (1, 2), (3, 4))
    assert span_vectors(F2, 4, 2, 1) in c
    assert subspace_from_rows(F2, 4, [(1, 1, 0, 0)]) not in c
