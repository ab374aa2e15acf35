import pytest

from flagcodes.cdc import EnumerationCapExceeded
from flagcodes.flags import (
    Flag,
    FlagCode,
    FlagError,
    TypeVector,
    closest_flags,
    disjointness_report,
    distinguished_type,
    dual_flag,
    dual_flag_code,
    dual_type,
    enumerate_flag_variety,
    flag_distance,
    flag_variety_size,
    flagcode_min_distance,
    lr_indices,
    max_flag_distance,
    projected_flag_code,
    projected_subspace_code,
)
from flagcodes.linalg import span_vectors
from flagcodes.worked_examples import FIVE_FLAG_DISTANCES, five_flags_n6, three_flags_n5


def test_type_vector_validation():
    assert TypeVector.parse(5, "1,2,3").dims == (1, 2, 3)
    for bad in ("2,1", "0,1", "1,5", ""):
        with pytest.raises(FlagError):
            TypeVector.parse(5, bad)
    with pytest.raises(FlagError):
        TypeVector.parse(5, "a,b")


def test_flag_validation(F2):
    t = TypeVector(3, (1, 2))
    with pytest.raises(FlagError):
        Flag(t, (span_vectors(F2, 3, 1), span_vectors(F2, 3, 2, 3)))
    with pytest.raises(FlagError):
        Flag(t, (span_vectors(F2, 3, 1, 2), span_vectors(F2, 3, 1, 2)))
    with pytest.raises(FlagError):
        Flag(t, (span_vectors(F2, 3, 1),))


def test_max_flag_distance():
    assert max_flag_distance(TypeVector(5, (1, 2, 3))) == 10
    assert max_flag_distance(TypeVector(6, (1, 2, 4, 5))) == 12
    assert max_flag_distance(TypeVector(6, (1, 2, 3, 4, 5))) == 18


def test_lr_indices_table():
    assert lr_indices(TypeVector(10, (1, 2, 4, 6, 8))) == (3, 4)
    assert lr_indices(TypeVector(10, (1, 2, 5, 6, 8))) == (3, 3)
    assert lr_indices(TypeVector(10, (6, 7, 9))) == (None, 1)
    assert lr_indices(TypeVector(10, (1, 2, 4))) == (3, None)
    assert distinguished_type(TypeVector(10, (1, 2, 4, 6, 8))).dims == (2, 4, 6, 8)
    assert distinguished_type(TypeVector(10, (6, 7, 9))).dims == (6, 7)


def test_five_flag_distances(F2):
    flags = five_flags_n6(F2)
    for (i, j), comps in FIVE_FLAG_DISTANCES.items():
        assert flag_distance(flags[i - 1], flags[j - 1]) == sum(comps)
    code = FlagCode.of(flags)
    assert flagcode_min_distance(code) == 8
    d, pair = closest_flags(code)
    assert flag_distance(code.flags[pair[0]], code.flags[pair[1]]) == d


def test_projections(F2):
    code = FlagCode.of(three_flags_n5(F2))
    assert len(projected_subspace_code(code, 1)) == 3
    proj = projected_flag_code(code, (2, 3))
    assert proj.type.dims == (2, 3) and len(proj) == 3
    with pytest.raises(FlagError):
        projected_flag_code(code, (3, 2))
    with pytest.raises(FlagError):
        projected_subspace_code(code, 4)


def test_disjointness(F2):
    flags = five_flags_n6(F2)
    rep = disjointness_report(FlagCode.of(flags))
    assert not rep.is_disjoint
    assert rep.collapse_dims == (1, 2, 4, 5)
    assert rep.projected_sizes == (4, 4, 4, 4)
    assert disjointness_report(FlagCode.of(flags[:1])).is_disjoint


def test_duality(F3):
    code = FlagCode.of(five_flags_n6(F3))
    dual = dual_flag_code(code)
    assert dual.type == dual_type(code.type) == TypeVector(6, (1, 2, 4, 5))
    assert flagcode_min_distance(dual) == flagcode_min_distance(code)
    assert dual_flag_code(dual) == code
    f = code.flags[0]
    assert dual_flag(dual_flag(f)) == f


@pytest.mark.parametrize("q,n,dims,count", [(2, 4, (1, 2, 3), 315), (2, 3, (1, 2), 21), (2, 4, (1, 3), 105), (3, 3, (1, 2), 52), (2, 5, (2,), 155)])
def test_variety_counts(q, n, dims, count):
    from flagcodes.field import make_field

    F = make_field(q)
    t = TypeVector(n, dims)
    flags = enumerate_flag_variety(F, t)
    assert len(flags) == len(set(flags)) == flag_variety_size(q, t) == count


def test_variety_cap(F2):
    with pytest.raises(EnumerationCapExceeded):
        enumerate_flag_variety(F2, TypeVector(4, (1, 2, 3)), cap=10)


def test_mixed_types_rejected(F2):
    a = Flag(TypeVector(3, (1,)), (span_vectors(F2, 3, 1),))
    b = Flag(TypeVector(3, (2,)), (span_vectors(F2, 3, 1, 2),))
    with pytest.raises(FlagError):
        FlagCode.of([a, b])
    with pytest.raises(FlagError):
        flag_distance(a, b)
