"""Matrices over GF(q) and subspaces of GF(q)^n in canonical form.

A :class:`Subspace` stores its reduced row echelon basis, so two subspaces
are equal exactly when their bases are equal entrywise.  Over GF(2) rows are
additionally packed into integer bitmasks (column 0 is the most significant
bit) and eliminated with XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .field import FieldSpec

__all__ = [
    "LinalgError",
    "MatrixGF",
    "Subspace",
    "rref",
    "rref_rows",
    "subspace_from_rows",
    "zero_subspace",
    "full_space",
    "span_vectors",
    "subspace_sum",
    "intersect",
    "orthogonal_complement",
    "is_contained",
    "subspace_distance",
    "sum_dimension",
    "null_space",
    "unit_vector",
]

Row = tuple[int, ...]


class LinalgError(ValueError):
    """Shape, field or ambient-dimension mismatch."""


@dataclass(frozen=True)
class MatrixGF:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise LinalgError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> "MatrixGF":
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise LinalgError("column count needed for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise LinalgError(f"row of length {len(r)} in a matrix with {cols} columns")
            for x in r:
                field.check(x)
        return cls(field, len(rows), cols, tuple(x for r in rows for x in r))

    def row(self, i: int) -> Row:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[Row]:
        return [self.row(i) for i in range(self.rows)]


# --- elimination ----------------------------------------------------------------


def _pack(row: Sequence[int]) -> int:
    v = 0
    for x in row:
        v = (v << 1) | x
    return v


def _unpack(v: int, n: int) -> Row:
    return tuple((v >> (n - 1 - j)) & 1 for j in range(n))


def _gf2_rref(packed: Iterable[int], n: int) -> list[int]:
    """Reduced echelon rows (as bitmasks) sorted by leading bit, leftmost first."""
    basis: dict[int, int] = {}  # leading bit -> row
    for v in packed:
        for lead in sorted(basis, reverse=True):
            if v >> lead & 1:
                v ^= basis[lead]
        if v:
            lead = v.bit_length() - 1
            for other in basis:
                if basis[other] >> lead & 1:
                    basis[other] ^= v
            basis[lead] = v
    return [basis[lead] for lead in sorted(basis, reverse=True)]


def _gf2_rank(packed: Iterable[int]) -> int:
    basis: list[int] = []
    for v in packed:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def rref_rows(field: FieldSpec, rows: Iterable[Sequence[int]], n: int) -> list[Row]:
    """Gauss-Jordan elimination; returns the nonzero rows of the RREF."""
    if field.order == 2:
        return [_unpack(v, n) for v in _gf2_rref((_pack(r) for r in rows), n)]
    mat = [list(r) for r in rows]
    add, mul, inv, neg = field.add, field.mul, field.inv, field.neg
    pivot_row = 0
    for col in range(n):
        if pivot_row == len(mat):
            break
        sel = next((i for i in range(pivot_row, len(mat)) if mat[i][col]), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        prow = mat[pivot_row]
        s = inv(prow[col])
        if s != 1:
            prow[:] = [mul(s, x) for x in prow]
        for i, other in enumerate(mat):
            if i != pivot_row and other[col]:
                c = neg(other[col])
                other[:] = [add(x, mul(c, y)) if y else x for x, y in zip(other, prow)]
        pivot_row += 1
    return [tuple(r) for r in mat[:pivot_row]]


def rref(mat: MatrixGF) -> tuple[MatrixGF, int]:
    rows = rref_rows(mat.field, mat.row_list(), mat.cols)
    return MatrixGF.from_rows(mat.field, rows, mat.cols), len(rows)


def null_space(field: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> list[Row]:
    """Basis of {x : M x^T = 0} for the matrix with the given rows."""
    reduced = rref_rows(field, rows, n)
    pivots = [next(j for j, x in enumerate(r) if x) for r in reduced]
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, pc in zip(reduced, pivots):
            if r[f]:
                v[pc] = field.neg(r[f])
        basis.append(tuple(v))
    return basis


# --- subspaces ------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n held by its RREF basis (no zero rows)."""

    field: FieldSpec
    n: int
    basis: tuple[Row, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    @cached_property
    def packed(self) -> tuple[int, ...]:
        return tuple(_pack(r) for r in self.basis)

    def sort_key(self) -> tuple:
        return (self.dim, self.basis)

    def contains_vector(self, v: Sequence[int]) -> bool:
        return _reduce(self, v) is None

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __repr__(self) -> str:
        rows = ",".join("".join(map(str, r)) if self.field.order <= 10 else str(list(r)) for r in self.basis)
        return f"<{rows or '0'}>"


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.field != v.field:
        raise LinalgError(f"subspaces over different fields {u.field!r} and {v.field!r}")
    if u.n != v.n:
        raise LinalgError(f"ambient dimensions differ ({u.n} vs {v.n})")


def subspace_from_rows(field: FieldSpec, n: int, rows: Iterable[Sequence[int]]) -> Subspace:
    rows = [tuple(r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise LinalgError(f"row of length {len(r)} in GF(q)^{n}")
        for x in r:
            field.check(x)
    return Subspace(field, n, tuple(rref_rows(field, rows, n)))


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, tuple(unit_vector(n, i) for i in range(n)))


def unit_vector(n: int, i: int) -> Row:
    """e_{i+1} in GF(q)^n (0-based position ``i``)."""
    return tuple(1 if j == i else 0 for j in range(n))


def span_vectors(field: FieldSpec, n: int, *positions: int) -> Subspace:
    """Span of standard basis vectors given by 1-based positions."""
    return subspace_from_rows(field, n, [unit_vector(n, i - 1) for i in positions])


def _reduce(u: Subspace, v: Sequence[int]):
    """Reduce ``v`` modulo ``u``'s RREF basis; ``None`` if it vanishes."""
    f = u.field
    if f.order == 2:
        x = _pack(v)
        for pc, row in zip(u.pivots, u.packed):
            if x >> (u.n - 1 - pc) & 1:
                x ^= row
        return x or None
    w = list(v)
    for pc, row in zip(u.pivots, u.basis):
        c = w[pc]
        if c:
            c = f.neg(c)
            w = [f.add(a, f.mul(c, b)) if b else a for a, b in zip(w, row)]
    return w if any(w) else None


def sum_dimension(u: Subspace, v: Subspace) -> int:
    """dim(U + V), by reducing V's basis modulo U."""
    _check_ambient(u, v)
    if u.dim < v.dim:
        u, v = v, u
    if u.field.order == 2:
        rest = []
        for x in v.packed:
            for pc, row in zip(u.pivots, u.packed):
                if x >> (u.n - 1 - pc) & 1:
                    x ^= row
            if x:
                rest.append(x)
        return u.dim + _gf2_rank(rest)
    rest = [w for w in (_reduce(u, r) for r in v.basis) if w is not None]
    if not rest:
        return u.dim
    return u.dim + len(rref_rows(u.field, rest, u.n))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace(u.field, u.n, tuple(rref_rows(u.field, u.basis + v.basis, u.n)))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """U ∩ V from the kernel of the stacked system x·A = y·B."""
    _check_ambient(u, v)
    f, n = u.field, u.n
    a, b = u.dim, v.dim
    if a == 0 or b == 0:
        return zero_subspace(f, n)
    # columns of [A; B]^T; a kernel vector (x, y) gives x·A = -y·B
    stacked_t = [tuple(r[j] for r in u.basis + v.basis) for j in range(n)]
    vectors = []
    for z in null_space(f, stacked_t, a + b):
        x = z[:a]
        vec = [0] * n
        for coef, row in zip(x, u.basis):
            if coef:
                vec = [f.add(s, f.mul(coef, t)) for s, t in zip(vec, row)]
        vectors.append(vec)
    return subspace_from_rows(f, n, vectors)


def orthogonal_complement(u: Subspace) -> Subspace:
    """U^⊥ under the standard bilinear form."""
    if u.dim == 0:
        return full_space(u.field, u.n)
    return subspace_from_rows(u.field, u.n, null_space(u.field, u.basis, u.n))


def is_contained(u: Subspace, v: Subspace) -> bool:
    """True when U ⊆ V."""
    _check_ambient(u, v)
    if u.dim > v.dim:
        return False
    return all(v.contains_vector(r) for r in u.basis)


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """dim(U + V) - dim(U ∩ V), written as 2·dim(U+V) - dim U - dim V."""
    return 2 * sum_dimension(u, v) - u.dim - v.dim
