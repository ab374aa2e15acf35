"""Seeded random flags, flag pairs and codes for property tests and sweeps."""

from __future__ import annotations

import random

from .field import FieldSpec
from .flags import Flag, FlagCode, TypeVector
from .linalg import Row, rref_rows, subspace_from_rows

__all__ = ["random_invertible_rows", "random_flag", "random_flag_sharing", "random_flag_code", "random_subspace"]


def random_invertible_rows(field: FieldSpec, n: int, rng: random.Random) -> list[Row]:
    """Rows of a uniformly random invertible n x n matrix (rejection sampling row by row)."""
    rows: list[Row] = []
    while len(rows) < n:
        cand = tuple(rng.randrange(field.order) for _ in range(n))
        if len(rref_rows(field, rows + [cand], n)) == len(rows) + 1:
            rows.append(cand)
    return rows


def _prefix_flag(field: FieldSpec, type: TypeVector, rows: list[Row]) -> Flag:
    return Flag(type, tuple(subspace_from_rows(field, type.n, rows[:t]) for t in type.dims))


def random_flag(field: FieldSpec, type: TypeVector, rng: random.Random) -> Flag:
    """Prefix spans of a random basis of GF(q)^n."""
    return _prefix_flag(field, type, random_invertible_rows(field, type.n, rng))


def random_subspace(field: FieldSpec, n: int, k: int, rng: random.Random):
    return subspace_from_rows(field, n, random_invertible_rows(field, n, rng)[:k])


def _extend(field: FieldSpec, n: int, basis: list[Row], pool, target: int) -> list[Row]:
    while len(basis) < target:
        cand = pool()
        if len(rref_rows(field, basis + [cand], n)) == len(basis) + 1:
            basis.append(cand)
    return basis


def random_flag_sharing(flag: Flag, i: int, rng: random.Random) -> Flag:
    """A random flag of the same type whose 1-based component ``i`` equals ``flag[i]``.

    A random basis of ``flag[i]`` is completed randomly to GF(q)^n and the
    flag is read off as prefix spans, so components below ``i`` vary inside
    the shared subspace and those above vary outside it.
    """
    field, n = flag.field, flag.type.n
    rows = flag[i].basis

    def inside() -> Row:
        v = [0] * n
        for r in rows:
            c = rng.randrange(field.order)
            if c:
                v = [field.add(a, field.mul(c, b)) for a, b in zip(v, r)]
        return tuple(v)

    basis = _extend(field, n, [], inside, len(rows))
    basis = _extend(field, n, basis, lambda: tuple(rng.randrange(field.order) for _ in range(n)), n)
    return _prefix_flag(field, flag.type, basis)


def random_flag_code(field: FieldSpec, type: TypeVector, size: int, rng: random.Random, share_prob: float = 0.0) -> FlagCode:
    """``size`` distinct random flags; with probability ``share_prob`` a new flag copies one component of an earlier one."""
    flags: list[Flag] = []
    seen = set()
    while len(flags) < size:
        if flags and rng.random() < share_prob:
            f = random_flag_sharing(rng.choice(flags), rng.randint(1, type.r), rng)
        else:
            f = random_flag(field, type, rng)
        if f not in seen:
            seen.add(f)
            flags.append(f)
    return FlagCode.of(flags, type=type)
