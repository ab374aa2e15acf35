"""Flags, flag codes and their projected codes.

Indices into a type vector are 1-based throughout (``t_1, ..., t_r``), so
``projected_subspace_code(C, 1)`` is the code of smallest-dimensional
subspaces and :func:`lr_indices` returns positions in the same convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .cdc import CodeError, ConstantDimensionCode, EnumerationCapExceeded, enumerate_grassmannian, gaussian_binomial, max_subspace_distance
from .field import FieldSpec
from .linalg import Subspace, is_contained, orthogonal_complement, subspace_distance, subspace_from_rows, unit_vector

__all__ = [
    "FlagError",
    "TypeVector",
    "Flag",
    "FlagCode",
    "LRIndices",
    "DisjointnessReport",
    "max_flag_distance",
    "flag_distance",
    "flag_distance_components",
    "closest_flags",
    "flagcode_min_distance",
    "projected_subspace_code",
    "projected_flag_code",
    "disjointness_report",
    "lr_indices",
    "distinguished_indices",
    "distinguished_type",
    "dual_type",
    "dual_flag",
    "dual_flag_code",
    "flag_variety_size",
    "enumerate_flag_variety",
]


class FlagError(ValueError):
    """Invalid type vector, malformed flag, or mismatched types."""


@dataclass(frozen=True)
class TypeVector:
    n: int
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(int(t) for t in self.dims))
        if not self.dims:
            raise FlagError("a type vector needs at least one dimension")
        if any(b <= a for a, b in zip(self.dims, self.dims[1:])):
            raise FlagError(f"type vector {self.dims} is not strictly increasing")
        if self.dims[0] <= 0 or self.dims[-1] >= self.n:
            raise FlagError(f"type vector {self.dims} must satisfy 0 < t_1 and t_r < n = {self.n}")

    @classmethod
    def parse(cls, n: int, text: str | Sequence[int]) -> "TypeVector":
        if isinstance(text, str):
            try:
                dims = [int(x) for x in text.replace(" ", "").split(",") if x]
            except ValueError as exc:
                raise FlagError(f"cannot parse type vector {text!r}") from exc
        else:
            dims = list(text)
        return cls(n, tuple(dims))

    @property
    def r(self) -> int:
        return len(self.dims)

    def t(self, i: int) -> int:
        """The 1-based dimension t_i."""
        return self.dims[i - 1]

    def sub(self, indices: Sequence[int]) -> "TypeVector":
        return TypeVector(self.n, tuple(self.t(i) for i in indices))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.dims)) + ")"


@dataclass(frozen=True)
class Flag:
    """A strictly nested sequence of subspaces with the dimensions of ``type``."""

    type: TypeVector
    subspaces: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        subs = self.subspaces
        if len(subs) != self.type.r:
            raise FlagError(f"flag has {len(subs)} subspaces, type {self.type} needs {self.type.r}")
        for i, (s, t) in enumerate(zip(subs, self.type.dims), start=1):
            if s.n != self.type.n:
                raise FlagError(f"subspace {i} lives in dimension {s.n}, not {self.type.n}")
            if s.dim != t:
                raise FlagError(f"subspace {i} has dimension {s.dim}, expected {t}")
        for i, (a, b) in enumerate(zip(subs, subs[1:]), start=1):
            if not is_contained(a, b):
                raise FlagError(f"subspace {i} is not contained in subspace {i + 1}")

    @classmethod
    def of(cls, type: TypeVector, subspaces: Iterable[Subspace]) -> "Flag":
        return cls(type, tuple(subspaces))

    @property
    def field(self) -> FieldSpec:
        return self.subspaces[0].field

    def __getitem__(self, i: int) -> Subspace:
        """The 1-based component F_i."""
        if not 1 <= i <= self.type.r:
            raise IndexError(f"flag index {i} outside 1..{self.type.r}")
        return self.subspaces[i - 1]

    def sort_key(self) -> tuple:
        return tuple(s.basis for s in self.subspaces)


@dataclass(frozen=True)
class FlagCode:
    """A set of flags of one type, in sorted canonical order.

    ``origin`` is a free-form note from builders (for instance that the
    code was produced on the dual type and dualized); it does not take part
    in equality.
    """

    type: TypeVector
    flags: tuple[Flag, ...]
    origin: str = dc_field(default="", compare=False)

    @classmethod
    def of(cls, flags: Iterable[Flag], type: TypeVector | None = None, origin: str = "") -> "FlagCode":
        flags = list(flags)
        if type is None:
            if not flags:
                raise FlagError("an empty flag code needs an explicit type")
            type = flags[0].type
        fields = {f.field for f in flags}
        if len(fields) > 1:
            raise FlagError("flags over different fields")
        for f in flags:
            if f.type != type:
                raise FlagError(f"flag of type {f.type} in a code of type {type}")
        unique = sorted(set(flags), key=Flag.sort_key)
        return cls(type, tuple(unique), origin)

    @property
    def field(self) -> FieldSpec:
        return self.flags[0].field

    @property
    def n(self) -> int:
        return self.type.n

    def __len__(self) -> int:
        return len(self.flags)

    def __iter__(self) -> Iterator[Flag]:
        return iter(self.flags)

    def pairs(self) -> Iterator[tuple[Flag, Flag]]:
        return itertools.combinations(self.flags, 2)

    def index_pairs(self) -> Iterator[tuple[int, int]]:
        return itertools.combinations(range(len(self.flags)), 2)


class LRIndices(NamedTuple):
    """1-based positions of t_L = max{t_i : 2t_i <= n} and t_R = min{t_i : 2t_i >= n}."""

    L: int | None
    R: int | None


@dataclass
class DisjointnessReport:
    is_disjoint: bool
    projected_sizes: tuple[int, ...]
    collapse_dims: tuple[int, ...]
    # collapse dimension -> indices (into code.flags) of one colliding pair
    witnesses: dict[int, tuple[int, int]]


def max_flag_distance(type: TypeVector) -> int:
    return sum(max_subspace_distance(type.n, t) for t in type.dims)


def _check_same_type(a: Flag, b: Flag) -> None:
    if a.type != b.type:
        raise FlagError(f"flags of different types {a.type} and {b.type}")


def flag_distance_components(a: Flag, b: Flag) -> tuple[int, ...]:
    _check_same_type(a, b)
    return tuple(subspace_distance(x, y) for x, y in zip(a.subspaces, b.subspaces))


def flag_distance(a: Flag, b: Flag) -> int:
    return sum(flag_distance_components(a, b))


def closest_flags(code: FlagCode) -> tuple[int, tuple[int, int] | None]:
    """Minimum distance and the indices of one pair attaining it; ``(0, None)`` for singletons."""
    if not len(code):
        raise FlagError("minimum distance of an empty flag code")
    best, witness = None, None
    flags = code.flags
    for i, j in code.index_pairs():
        d = flag_distance(flags[i], flags[j])
        if best is None or d < best:
            best, witness = d, (i, j)
    if best is None:
        return 0, None
    return best, witness


def flagcode_min_distance(code: FlagCode) -> int:
    return closest_flags(code)[0]


def _check_index(code: FlagCode, i: int) -> None:
    if not 1 <= i <= code.type.r:
        raise FlagError(f"projection index {i} outside 1..{code.type.r}")


def projected_subspace_code(code: FlagCode, i: int) -> ConstantDimensionCode:
    _check_index(code, i)
    field = code.field if len(code) else None
    return ConstantDimensionCode.of((f[i] for f in code), field=field, n=code.n, k=code.type.t(i))


def projected_flag_code(code: FlagCode, indices: Sequence[int]) -> FlagCode:
    indices = tuple(indices)
    if not indices or any(b <= a for a, b in zip(indices, indices[1:])):
        raise FlagError(f"projection indices {indices} must be strictly increasing")
    for i in indices:
        _check_index(code, i)
    sub = code.type.sub(indices)
    return FlagCode.of((Flag(sub, tuple(f[i] for i in indices)) for f in code), type=sub)


def disjointness_report(code: FlagCode) -> DisjointnessReport:
    size = len(code)
    sizes = []
    witnesses: dict[int, tuple[int, int]] = {}
    for i in range(1, code.type.r + 1):
        seen: dict[Subspace, int] = {}
        for idx, f in enumerate(code.flags):
            s = f[i]
            if s in seen:
                witnesses.setdefault(code.type.t(i), (seen[s], idx))
            else:
                seen[s] = idx
        sizes.append(len(seen))
    return DisjointnessReport(
        is_disjoint=all(s == size for s in sizes),
        projected_sizes=tuple(sizes),
        collapse_dims=tuple(sorted(witnesses)),
        witnesses=witnesses,
    )


def lr_indices(type: TypeVector) -> LRIndices:
    n = type.n
    low = [i for i, t in enumerate(type.dims, start=1) if 2 * t <= n]
    high = [i for i, t in enumerate(type.dims, start=1) if 2 * t >= n]
    return LRIndices(low[-1] if low else None, high[0] if high else None)


def distinguished_indices(type: TypeVector) -> tuple[int, ...]:
    """Existing positions among L-1, L, R, R+1, deduplicated and increasing."""
    L, R = lr_indices(type)
    wanted = set()
    if L is not None:
        wanted.update({L - 1, L})
    if R is not None:
        wanted.update({R, R + 1})
    return tuple(sorted(i for i in wanted if 1 <= i <= type.r))


def distinguished_type(type: TypeVector) -> TypeVector:
    return type.sub(distinguished_indices(type))


def dual_type(type: TypeVector) -> TypeVector:
    return TypeVector(type.n, tuple(type.n - t for t in reversed(type.dims)))


def dual_flag(flag: Flag) -> Flag:
    return Flag(dual_type(flag.type), tuple(orthogonal_complement(s) for s in reversed(flag.subspaces)))


def dual_flag_code(code: FlagCode) -> FlagCode:
    return FlagCode.of((dual_flag(f) for f in code), type=dual_type(code.type), origin=code.origin)


def flag_variety_size(q: int, type: TypeVector) -> int:
    """Number of flags of the given type: a product of Gaussian binomials."""
    total, prev = 1, 0
    for t in type.dims:
        total *= gaussian_binomial(q, type.n - prev, t - prev)
        prev = t
    return total


def _superspaces(sub: Subspace, dim: int) -> Iterator[Subspace]:
    """Subspaces of dimension ``dim`` containing ``sub``, via the quotient by ``sub``."""
    field, n = sub.field, sub.n
    pivots = set(sub.pivots)
    complement = [unit_vector(n, j) for j in range(n) if j not in pivots]
    for w in enumerate_grassmannian(field, n - sub.dim, dim - sub.dim, cap=None):
        rows = list(sub.basis)
        for coeffs in w.basis:
            v = [0] * n
            for c, e in zip(coeffs, complement):
                if c:
                    v = [field.add(x, field.mul(c, y)) for x, y in zip(v, e)]
            rows.append(v)
        yield subspace_from_rows(field, n, rows)


def enumerate_flag_variety(field: FieldSpec, type: TypeVector, cap: int | None = 100_000) -> list[Flag]:
    """Every flag of the given type exactly once, in canonical sorted order."""
    count = flag_variety_size(field.order, type)
    if cap is not None and count > cap:
        raise EnumerationCapExceeded(f"flag variety of type {type} over GF({field.order}) has {count} flags, above the cap {cap}")
    chains: list[list[Subspace]] = [[s] for s in enumerate_grassmannian(field, type.n, type.dims[0], cap=None)]
    for t in type.dims[1:]:
        chains = [chain + [s] for chain in chains for s in _superspaces(chain[-1], t)]
    flags = [Flag(type, tuple(chain)) for chain in chains]
    return sorted(flags, key=Flag.sort_key)
