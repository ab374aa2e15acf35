"""Small hand-written flag codes used as golden references.

``three_flags_n5`` has type (1, 2, 3) on GF(q)^5 and yields three QODFCs with
different distance losses; ``five_flags_n6`` has type (1, 2, 4, 5) on
GF(q)^6 and minimum distance D - 4 with collapses at every dimension.
Both are defined over any prime field.
"""

from __future__ import annotations

from .field import FieldSpec
from .flags import Flag, FlagCode, TypeVector
from .linalg import span_vectors

__all__ = [
    "three_flags_n5",
    "five_flags_n6",
    "qodfc_examples_n5",
    "FIVE_FLAG_DISTANCES",
    "FIVE_FLAG_SUBCODES",
]

_N5 = (
    ((1,), (1, 2), (1, 2, 3)),
    ((4,), (1, 4), (1, 4, 5)),
    ((3,), (3, 4), (2, 3, 4)),
)

_N6 = (
    ((1,), (1, 2), (1, 2, 3, 4), (1, 2, 3, 4, 5)),
    ((2,), (1, 2), (1, 2, 5, 6), (1, 2, 3, 5, 6)),
    ((2,), (2, 3), (2, 3, 4, 5), (2, 3, 4, 5, 6)),
    ((6,), (5, 6), (1, 2, 5, 6), (1, 2, 4, 5, 6)),
    ((5,), (3, 5), (1, 3, 5, 6), (1, 2, 3, 5, 6)),
)

# (i, j) -> per-dimension distances, 1-based flag numbers
FIVE_FLAG_DISTANCES: dict[tuple[int, int], tuple[int, ...]] = {
    (1, 2): (2, 0, 4, 2),
    (1, 3): (2, 2, 2, 2),
    (1, 4): (2, 4, 4, 2),
    (1, 5): (2, 4, 4, 2),
    (2, 3): (0, 2, 4, 2),
    (2, 4): (2, 4, 0, 2),
    (2, 5): (2, 4, 2, 0),
    (3, 4): (2, 4, 4, 2),
    (3, 5): (2, 2, 4, 2),
    (4, 5): (2, 2, 2, 2),
}

# sub-code (1-based flag numbers) -> ("d_S(C_i) maximum?" pattern, "|C_i| = |C|?" pattern)
FIVE_FLAG_SUBCODES: dict[tuple[int, ...], tuple[tuple[bool, ...], tuple[bool, ...]]] = {
    (1, 2, 3, 4, 5): ((True, False, False, True), (False, False, False, False)),
    (2, 3, 4, 5): ((True, False, False, True), (False, True, False, False)),
    (2, 3, 4): ((True, False, False, True), (False, True, False, True)),
    (1, 2): ((True, False, True, True), (True, False, True, True)),
    (1, 3): ((True, False, False, True), (True, True, True, True)),
    (2, 3): ((False, False, True, True), (False, True, True, True)),
    (2, 5): ((True, True, False, False), (True, True, True, False)),
}


def _flags(field: FieldSpec, n: int, dims: tuple[int, ...], spec) -> list[Flag]:
    t = TypeVector(n, dims)
    return [Flag(t, tuple(span_vectors(field, n, *pos) for pos in chain)) for chain in spec]


def three_flags_n5(field: FieldSpec) -> list[Flag]:
    """F^1, F^2, F^3 of type (1, 2, 3) on GF(q)^5, in that order."""
    return _flags(field, 5, (1, 2, 3), _N5)


def qodfc_examples_n5(field: FieldSpec) -> dict[str, FlagCode]:
    """The codes {F1, F2}, {F1, F3} and {F1, F2, F3}."""
    f1, f2, f3 = three_flags_n5(field)
    return {
        "C": FlagCode.of([f1, f2]),
        "C'": FlagCode.of([f1, f3]),
        "C''": FlagCode.of([f1, f2, f3]),
    }


def five_flags_n6(field: FieldSpec) -> list[Flag]:
    """F^1, ..., F^5 of type (1, 2, 4, 5) on GF(q)^6, in that order."""
    return _flags(field, 6, (1, 2, 4, 5), _N6)
