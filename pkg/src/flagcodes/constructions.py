"""Systematic builders: spreads, sunflowers, high-dimension max-distance codes, QODFCs, C(l).

Every builder is deterministic.  The spread is the field-extension spread of
X = <e_1, ..., e_2k>: one member [I_k | M_a] per element a of GF(q^k), where
M_a is the matrix of multiplication by a, followed by [0 | I_k].  The
generator matrix of each member is kept, so "the first j rows" is stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .cdc import ConstantDimensionCode
from .field import FieldSpec, _poly_mod, find_irreducible
from .flags import (
    Flag,
    FlagCode,
    FlagError,
    TypeVector,
    dual_flag_code,
    dual_type,
    enumerate_flag_variety,
    flagcode_min_distance,
    lr_indices,
    max_flag_distance,
)
from .linalg import Subspace, null_space, orthogonal_complement, subspace_from_rows, unit_vector, zero_subspace

__all__ = [
    "ConstructionError",
    "SpreadScaffold",
    "CHECK_PAIR_LIMIT",
    "build_spread_scaffold",
    "truncated_partial_spread",
    "build_sunflower",
    "build_max_cdc_high",
    "build_qodfc",
    "build_c_ell",
    "build_qodfc_hyperplane_type",
    "build_flag_variety_line_hyperplane",
]

Row = tuple[int, ...]

# checked mode runs the distance oracle when the code has at most this many pairs
CHECK_PAIR_LIMIT = 10**6


class ConstructionError(ValueError):
    """Parameters outside a builder's preconditions, or a failed build-time check."""


@dataclass(frozen=True)
class SpreadScaffold:
    field: FieldSpec
    k: int
    n: int
    generators: tuple[tuple[Row, ...], ...]  # k x n generator matrix per member
    u: Row | None  # e_{2k+1}, when n > 2k
    v: Row | None  # e_{2k+2}, when n > 2k + 1

    @property
    def size(self) -> int:
        return len(self.generators)

    def successor(self, i: int) -> int:
        """Cyclic successor of the 0-based member index ``i``."""
        return (i + 1) % self.size

    def truncation(self, i: int, j: int) -> Subspace:
        """S_i^(j): row space of the first ``j`` generator rows (zero subspace for j = 0)."""
        if not 0 <= j <= self.k:
            raise ConstructionError(f"truncation length {j} outside 0..{self.k}")
        if j == 0:
            return zero_subspace(self.field, self.n)
        return subspace_from_rows(self.field, self.n, self.generators[i][:j])

    def member(self, i: int) -> Subspace:
        return self.truncation(i, self.k)

    def with_extra(self, i: int, j: int, extra: Sequence[Row], next_j: int = 0) -> Subspace:
        """S_i^(j) + S_{i+1}^(next_j) + <extra>."""
        rows = list(self.generators[i][:j]) + list(self.generators[self.successor(i)][:next_j]) + list(extra)
        return subspace_from_rows(self.field, self.n, rows)


def _multiplication_matrix(field: FieldSpec, modulus: Sequence[int], alpha: Sequence[int]) -> list[list[int]]:
    """Row r holds the coefficients of alpha * x^r reduced modulo ``modulus``."""
    k = len(modulus) - 1
    rows = []
    for r in range(k):
        shifted = [0] * r + list(alpha)
        red = _poly_mod(field, shifted, modulus)
        rows.append(red + [0] * (k - len(red)))
    return rows


def _extension_elements(q: int, k: int) -> list[list[int]]:
    """Coefficient vectors (x^0 first) of GF(q^k) in ascending base-q order."""
    out = []
    for code in range(q**k):
        coeffs = []
        for _ in range(k):
            code, digit = divmod(code, q)
            coeffs.append(digit)
        out.append(coeffs)
    return out


def build_spread_scaffold(field: FieldSpec, k: int, n: int) -> SpreadScaffold:
    """k-spread of <e_1, ..., e_2k> inside GF(q)^n, plus the auxiliary vectors u and v."""
    if k < 1:
        raise ConstructionError(f"spread parameter k must be >= 1, got {k}")
    if n < 2 * k:
        raise ConstructionError(f"need n >= 2k, got n={n}, k={k}")
    modulus = find_irreducible(field, k)
    pad = [0] * (n - 2 * k)
    gens = []
    for alpha in _extension_elements(field.order, k):
        m = _multiplication_matrix(field, modulus, alpha)
        gens.append(tuple(tuple(list(unit_vector(k, r)) + m[r] + pad) for r in range(k)))
    gens.append(tuple(tuple([0] * k + list(unit_vector(k, r)) + pad) for r in range(k)))
    u = unit_vector(n, 2 * k) if n > 2 * k else None
    v = unit_vector(n, 2 * k + 1) if n > 2 * k + 1 else None
    return SpreadScaffold(field, k, n, tuple(gens), u, v)


def _code(scaffold: SpreadScaffold, subs: list[Subspace], dim: int) -> ConstantDimensionCode:
    code = ConstantDimensionCode.of(subs, field=scaffold.field, n=scaffold.n, k=dim)
    if len(code) != scaffold.size:
        raise ConstructionError(f"expected {scaffold.size} distinct subspaces, got {len(code)}")
    return code


def truncated_partial_spread(scaffold: SpreadScaffold, j: int) -> ConstantDimensionCode:
    if not 1 <= j <= scaffold.k:
        raise ConstructionError(f"truncation length j={j} outside 1..{scaffold.k}")
    return _code(scaffold, [scaffold.truncation(i, j) for i in range(scaffold.size)], j)


def build_sunflower(scaffold: SpreadScaffold, j: int) -> ConstantDimensionCode:
    """S^(j) + <u>: a sunflower with center <u> and distance 2j."""
    if scaffold.u is None:
        raise ConstructionError("the sunflower needs u = e_{2k+1}, so n > 2k")
    if not 1 <= j < scaffold.n // 2 or j > scaffold.k:
        raise ConstructionError(f"sunflower parameter j={j} outside 1..{min(scaffold.k, scaffold.n // 2 - 1)}")
    return _code(scaffold, [scaffold.with_extra(i, j, [scaffold.u]) for i in range(scaffold.size)], j + 1)


def _high_extra(scaffold: SpreadScaffold) -> list[Row]:
    n, k = scaffold.n, scaffold.k
    if n == 2 * k + 1:
        return [scaffold.u]
    if n == 2 * k + 2:
        return [scaffold.u, scaffold.v]
    raise ConstructionError(f"high-dimension codes need n in {{2k+1, 2k+2}}, got n={n}, k={k}")


def build_max_cdc_high(scaffold: SpreadScaffold, j: int) -> ConstantDimensionCode:
    """U_i^(j) (n odd) or V_i^(j) (n even): S_i + S_{i+1}^(j-1) + <u[, v]>, cyclic in i."""
    extra = _high_extra(scaffold)
    if not 1 <= j <= scaffold.k:
        raise ConstructionError(f"parameter j={j} outside 1..{scaffold.k}")
    subs = [scaffold.with_extra(i, scaffold.k, extra, j - 1) for i in range(scaffold.size)]
    return _code(scaffold, subs, scaffold.k + j - 1 + len(extra))


# --- flag codes -----------------------------------------------------------------


def _verify(code: FlagCode, expected: int, checked: bool | None, what: str) -> FlagCode:
    pairs = comb(len(code), 2)
    if checked is None:
        checked = pairs <= CHECK_PAIR_LIMIT
    if checked:
        d = flagcode_min_distance(code)
        if d != expected:
            raise ConstructionError(f"{what}: oracle distance {d}, expected {expected}")
    return code


def _assemble(field: FieldSpec, type: TypeVector, rows_per_flag: list[list[Subspace]], origin: str) -> FlagCode:
    try:
        flags = [Flag(type, tuple(subs)) for subs in rows_per_flag]
    except FlagError as exc:
        raise ConstructionError(f"dimension arithmetic failed for type {type} on GF({field.order})^{type.n}: {exc}") from exc
    code = FlagCode.of(flags, type=type, origin=origin)
    if len(code) != len(flags):
        raise ConstructionError(f"expected {len(flags)} distinct flags, got {len(code)}")
    return code


def _spread_flags(field: FieldSpec, type: TypeVector, ell: int) -> FlagCode:
    n = type.n
    L = lr_indices(type).L
    k = (n - 1) // 2
    sc = build_spread_scaffold(field, k, n)
    extra = _high_extra(sc)
    band = range(L - ell + 1, L + 1)
    per_flag = []
    for i in range(sc.size):
        subs = []
        for j in range(1, type.r + 1):
            t = type.t(j)
            if j < band.start:
                if t > k:
                    raise ConstructionError(f"t_{j} = {t} exceeds the spread dimension k = {k}")
                subs.append(sc.truncation(i, t))
            elif j in band:
                if t - 1 > k:
                    raise ConstructionError(f"t_{j} - 1 = {t - 1} exceeds the spread dimension k = {k}")
                subs.append(sc.with_extra(i, t - 1, [sc.u]))
            else:
                step = t - k - len(extra)  # rows taken from the successor member
                if not 0 <= step <= k - 1:
                    raise ConstructionError(f"t_{j} = {t} outside the high range for n = {n}")
                subs.append(sc.with_extra(i, k, extra, step))
        per_flag.append(subs)
    return _assemble(field, type, per_flag, "")


def _check_n(type: TypeVector) -> None:
    if type.n < 3:
        raise ConstructionError(f"need n >= 3 so that k = floor((n-1)/2) >= 1, got n = {type.n}")


def build_c_ell(field: FieldSpec, type: TypeVector, ell: int, checked: bool | None = None) -> FlagCode:
    """C(l): l consecutive sunflower dimensions ending at t_L; distance D - 2l, size q^k + 1.

    Types with no dimension <= n/2 are built on the dual type and dualized.
    """
    _check_n(type)
    L = lr_indices(type).L
    if L is None:
        dual = build_c_ell(field, dual_type(type), ell, checked=False)
        code = dual_flag_code(dual)
        code = FlagCode(code.type, code.flags, f"dual of the construction for type {dual.type}")
    else:
        if not 1 <= ell <= L:
            raise ConstructionError(f"l = {ell} outside 1..L = {L}")
        code = _spread_flags(field, type, ell)
    return _verify(code, max_flag_distance(type) - 2 * ell, checked, f"C({ell}) of type {type}")


def build_qodfc(field: FieldSpec, type: TypeVector, checked: bool | None = None) -> FlagCode:
    """Disjoint QODFC of size q^k + 1 with k = floor((n-1)/2); identical to C(1)."""
    return build_c_ell(field, type, 1, checked)


def _hyperplane_containing(sub: Subspace) -> Subspace:
    w = orthogonal_complement(sub).basis[0]
    return subspace_from_rows(sub.field, sub.n, null_space(sub.field, [w], sub.n))


def build_qodfc_hyperplane_type(field: FieldSpec, type: TypeVector, checked: bool | None = None) -> FlagCode:
    """Non-disjoint QODFC of type (..., t_{r-1}, n-1) with t_{r-1} < n/2.

    F^i_{r-1} runs over a partial t_{r-1}-spread of size q^{t_{r-1}} + 1, lower
    dimensions are generator-row prefixes, and the first two flags share one
    hyperplane.  A type (1, t_2, ...) with t_2 > n/2 is built on its dual.
    """
    n, r = type.n, type.r
    if r >= 2 and type.t(r) == n - 1 and 2 * type.t(r - 1) < n:
        k = type.t(r - 1)
        sc = build_spread_scaffold(field, k, n)
        per_flag = []
        for i in range(sc.size):
            subs = [sc.truncation(i, type.t(j)) for j in range(1, r)]
            top = sc.with_extra(0, k, [], k) if i < 2 else subs[-1]
            subs.append(_hyperplane_containing(top))
            per_flag.append(subs)
        code = _assemble(field, type, per_flag, "")
    elif r >= 2 and type.t(1) == 1 and 2 * type.t(2) > n:
        dual = build_qodfc_hyperplane_type(field, dual_type(type), checked=False)
        code = dual_flag_code(dual)
        code = FlagCode(code.type, code.flags, f"dual of the construction for type {dual.type}")
    else:
        raise ConstructionError(
            f"type {type} is neither (..., t_(r-1), n-1) with t_(r-1) < n/2 nor (1, t_2, ...) with t_2 > n/2"
        )
    return _verify(code, max_flag_distance(type) - 2, checked, f"hyperplane construction of type {type}")


def build_flag_variety_line_hyperplane(field: FieldSpec, n: int, cap: int | None = 100_000, checked: bool | None = None) -> FlagCode:
    """Every incident (line, hyperplane) pair of GF(q)^n."""
    if n < 3:
        raise ConstructionError(f"type (1, n-1) needs n >= 3, got n = {n}")
    type = TypeVector(n, (1, n - 1))
    code = FlagCode.of(enumerate_flag_variety(field, type, cap=cap), type=type)
    return _verify(code, 2, checked, f"flag variety of type {type}")
