"""Constant dimension codes: distances, spread and sunflower predicates, duals, bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .field import FieldSpec
from .linalg import (
    Subspace,
    intersect,
    orthogonal_complement,
    subspace_distance,
    sum_dimension,
    zero_subspace,
)

__all__ = [
    "CodeError",
    "EnumerationCapExceeded",
    "ConstantDimensionCode",
    "SpreadBound",
    "cdc_min_distance",
    "closest_subspaces",
    "max_subspace_distance",
    "is_partial_spread",
    "spread_violation",
    "is_max_distance",
    "max_distance_violation",
    "sunflower_center",
    "sunflower_violation",
    "sunflower_quotient_check",
    "dual_cdc",
    "partial_spread_bound",
    "gaussian_binomial",
    "enumerate_grassmannian",
    "iter_grassmannian",
]


class CodeError(ValueError):
    """Inconsistent or empty code, or an undefined query."""


class EnumerationCapExceeded(CodeError):
    pass


@dataclass(frozen=True)
class ConstantDimensionCode:
    """A set of k-dimensional subspaces of GF(q)^n, kept in sorted canonical order."""

    field: FieldSpec
    n: int
    k: int
    elements: tuple[Subspace, ...]

    @classmethod
    def of(
        cls,
        subspaces: Iterable[Subspace],
        *,
        field: FieldSpec | None = None,
        n: int | None = None,
        k: int | None = None,
    ) -> "ConstantDimensionCode":
        subs = list(subspaces)
        if subs:
            field = subs[0].field if field is None else field
            n = subs[0].n if n is None else n
            k = subs[0].dim if k is None else k
        if field is None or n is None or k is None:
            raise CodeError("an empty code needs explicit field, n and k")
        for s in subs:
            if s.field != field or s.n != n:
                raise CodeError(f"subspace {s!r} does not live in {field!r}^{n}")
            if s.dim != k:
                raise CodeError(f"subspace {s!r} has dimension {s.dim}, expected {k}")
        unique = sorted(set(subs), key=Subspace.sort_key)
        return cls(field, n, k, tuple(unique))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def pairs(self) -> Iterator[tuple[Subspace, Subspace]]:
        return itertools.combinations(self.elements, 2)


def max_subspace_distance(n: int, k: int) -> int:
    return 2 * min(k, n - k)


def closest_subspaces(code: ConstantDimensionCode) -> tuple[int, tuple[Subspace, Subspace] | None]:
    """Minimum distance and one pair attaining it (``(0, None)`` for a singleton)."""
    if not len(code):
        raise CodeError("minimum distance of an empty code")
    best, witness = None, None
    for u, v in code.pairs():
        d = subspace_distance(u, v)
        if best is None or d < best:
            best, witness = d, (u, v)
            if d == 2:
                break
    if best is None:
        return 0, None
    return best, witness


def cdc_min_distance(code: ConstantDimensionCode) -> int:
    return closest_subspaces(code)[0]


def spread_violation(code: ConstantDimensionCode) -> tuple[Subspace, Subspace] | None:
    """A pair of distinct members meeting nontrivially, if any."""
    for u, v in code.pairs():
        if sum_dimension(u, v) < u.dim + v.dim:
            return u, v
    return None


def is_partial_spread(code: ConstantDimensionCode) -> bool:
    return spread_violation(code) is None


def max_distance_violation(code: ConstantDimensionCode) -> tuple[Subspace, Subspace] | None:
    if 2 * code.k <= code.n:
        return spread_violation(code)
    for u, v in code.pairs():
        if sum_dimension(u, v) < code.n:
            return u, v
    return None


def is_max_distance(code: ConstantDimensionCode) -> bool:
    """Pairwise trivial intersection for 2k <= n, pairwise full sum for 2k >= n."""
    return max_distance_violation(code) is None


def sunflower_violation(code: ConstantDimensionCode) -> tuple[tuple[Subspace, Subspace], tuple[Subspace, Subspace]] | None:
    if len(code) < 2:
        raise CodeError("trivially a sunflower, center undetermined")
    pairs = code.pairs()
    first = next(pairs)
    center = intersect(*first)
    for pair in pairs:
        if intersect(*pair) != center:
            return first, pair
    return None


def sunflower_center(code: ConstantDimensionCode) -> Subspace | None:
    """The common pairwise intersection, or ``None`` when the code is not a sunflower.

    Partial spreads are sunflowers with the zero subspace as center.
    """
    if sunflower_violation(code) is not None:
        return None
    u, v = code.elements[:2]
    return intersect(u, v)


def sunflower_quotient_check(code: ConstantDimensionCode, center: Subspace) -> bool:
    """Every pair meets exactly in ``center`` and d_S(C) = 2(k - dim center)."""
    if sunflower_center(code) != center:
        raise CodeError(f"{center!r} is not the center of this code")
    c = center.dim
    for u, v in code.pairs():
        if intersect(u, v) != center:
            return False
        # U and V split as center ⊕ (complements meeting trivially)
        if sum_dimension(u, v) != 2 * code.k - c:
            return False
    return cdc_min_distance(code) == 2 * (code.k - c)


def dual_cdc(code: ConstantDimensionCode) -> ConstantDimensionCode:
    return ConstantDimensionCode.of(
        (orthogonal_complement(u) for u in code),
        field=code.field,
        n=code.n,
        k=code.n - code.k,
    )


class SpreadBound(NamedTuple):
    value: int
    exact: bool  # k divides n: a spread of exactly this size exists


def partial_spread_bound(q: int, n: int, k: int) -> SpreadBound:
    if not 1 <= k <= n:
        raise CodeError(f"need 1 <= k <= n, got k={k}, n={n}")
    return SpreadBound((q**n - 1) // (q**k - 1), n % k == 0)


def gaussian_binomial(q: int, n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise CodeError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def iter_grassmannian(field: FieldSpec, n: int, k: int) -> Iterator[Subspace]:
    """All k-dimensional subspaces, one RREF matrix per pivot pattern and free filling."""
    if k == 0:
        yield zero_subspace(field, n)
        return
    q = field.order
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            yield Subspace(field, n, tuple(tuple(r) for r in rows))


def enumerate_grassmannian(field: FieldSpec, n: int, k: int, cap: int | None = 100_000) -> list[Subspace]:
    """Every k-subspace of GF(q)^n exactly once, sorted by canonical basis."""
    if not 0 <= k <= n:
        raise CodeError(f"need 0 <= k <= n, got k={k}, n={n}")
    count = gaussian_binomial(field.order, n, k)
    if cap is not None and count > cap:
        raise EnumerationCapExceeded(f"G_{field.order}({k}, {n}) has {count} elements, above the cap {cap}")
    return sorted(iter_grassmannian(field, n, k), key=lambda s: s.basis)
