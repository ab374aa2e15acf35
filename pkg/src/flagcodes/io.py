"""JSON interchange for subspace codes, flag codes and certificates, plus a plain matrix dump.

Field elements are stored as base-p integers.  Subspaces are written as
their canonical RREF rows; on load any basis is accepted, re-reduced, and a
warning is recorded when the stored rows were not already canonical.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .cdc import ConstantDimensionCode
from .field import FieldError, FieldSpec, field_from_json, field_to_json
from .flags import Flag, FlagCode, FlagError, TypeVector
from .linalg import LinalgError, Subspace, subspace_from_rows

__all__ = [
    "IOFormatError",
    "FLAG_CODE_FORMAT",
    "SUBSPACE_CODE_FORMAT",
    "flag_code_to_json",
    "flag_code_from_json",
    "subspace_code_to_json",
    "subspace_code_from_json",
    "load_code",
    "dump_json",
    "write_json",
    "matrix_dump",
]

FLAG_CODE_FORMAT = "flag-code"
SUBSPACE_CODE_FORMAT = "subspace-code"


class IOFormatError(ValueError):
    """Malformed or inconsistent code file."""


def _subspace_rows(s: Subspace) -> list[list[int]]:
    return [list(r) for r in s.basis]


def flag_code_to_json(code: FlagCode) -> dict[str, Any]:
    return {
        "format": FLAG_CODE_FORMAT,
        "field": field_to_json(code.field),
        "n": code.n,
        "type": list(code.type.dims),
        "origin": code.origin,
        "flags": [[_subspace_rows(s) for s in f.subspaces] for f in code],
    }


def subspace_code_to_json(code: ConstantDimensionCode) -> dict[str, Any]:
    return {
        "format": SUBSPACE_CODE_FORMAT,
        "field": field_to_json(code.field),
        "n": code.n,
        "k": code.k,
        "subspaces": [_subspace_rows(s) for s in code],
    }


def _load_subspace(field: FieldSpec, n: int, rows: Any, where: str, warnings: list[str]) -> Subspace:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise IOFormatError(f"{where}: expected a list of rows")
    try:
        s = subspace_from_rows(field, n, [tuple(int(x) for x in r) for r in rows])
    except (LinalgError, FieldError, ValueError, TypeError) as exc:
        raise IOFormatError(f"{where}: {exc}") from exc
    if len(s.basis) != len(rows):
        raise IOFormatError(f"{where}: {len(rows)} rows span only a {s.dim}-dimensional subspace")
    if [list(r) for r in s.basis] != rows:
        warnings.append(f"{where}: rows were not in reduced echelon form and have been re-reduced")
    return s


def _header(data: Any, fmt: str) -> tuple[FieldSpec, int]:
    if not isinstance(data, dict):
        raise IOFormatError("top level must be a JSON object")
    if data.get("format") != fmt:
        raise IOFormatError(f"expected format {fmt!r}, found {data.get('format')!r}")
    try:
        field = field_from_json(data["field"])
        n = int(data["n"])
    except KeyError as exc:
        raise IOFormatError(f"missing key {exc.args[0]!r}") from exc
    except (FieldError, TypeError, ValueError) as exc:
        raise IOFormatError(f"bad field or n: {exc}") from exc
    return field, n


def flag_code_from_json(data: Any) -> tuple[FlagCode, list[str]]:
    field, n = _header(data, FLAG_CODE_FORMAT)
    try:
        type = TypeVector(n, tuple(int(t) for t in data["type"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise IOFormatError(f"bad type vector: {exc}") from exc
    warnings: list[str] = []
    flags = []
    raw = data.get("flags")
    if not isinstance(raw, list) or not raw:
        raise IOFormatError("'flags' must be a non-empty list")
    for idx, chain in enumerate(raw):
        if not isinstance(chain, list) or len(chain) != type.r:
            raise IOFormatError(f"flag {idx}: expected {type.r} subspaces")
        subs = tuple(_load_subspace(field, n, rows, f"flag {idx}, subspace {j + 1}", warnings) for j, rows in enumerate(chain))
        try:
            flags.append(Flag(type, subs))
        except FlagError as exc:
            raise IOFormatError(f"flag {idx}: {exc}") from exc
    code = FlagCode.of(flags, type=type, origin=str(data.get("origin", "")))
    if len(code) != len(flags):
        warnings.append(f"{len(flags) - len(code)} duplicate flag(s) removed")
    return code, warnings


def subspace_code_from_json(data: Any) -> tuple[ConstantDimensionCode, list[str]]:
    field, n = _header(data, SUBSPACE_CODE_FORMAT)
    try:
        k = int(data["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise IOFormatError(f"bad k: {exc}") from exc
    warnings: list[str] = []
    subs = []
    for idx, rows in enumerate(data.get("subspaces") or []):
        s = _load_subspace(field, n, rows, f"subspace {idx}", warnings)
        if s.dim != k:
            raise IOFormatError(f"subspace {idx}: dimension {s.dim}, expected {k}")
        subs.append(s)
    if not subs:
        raise IOFormatError("'subspaces' must be a non-empty list")
    return ConstantDimensionCode.of(subs, field=field, n=n, k=k), warnings


def load_code(path: str | Path) -> tuple[FlagCode | ConstantDimensionCode, list[str]]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise IOFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise IOFormatError(f"{path} is not valid JSON: {exc}") from exc
    fmt = data.get("format") if isinstance(data, dict) else None
    if fmt == SUBSPACE_CODE_FORMAT:
        return subspace_code_from_json(data)
    return flag_code_from_json(data)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dump_json(obj))


def _row_text(row, q: int) -> str:
    return "".join(map(str, row)) if q <= 10 else " ".join(map(str, row))


def matrix_dump(code: FlagCode | ConstantDimensionCode) -> str:
    """One block per flag (or subspace), one line per basis row, blank line between blocks."""
    q = code.field.order
    blocks = []
    if isinstance(code, FlagCode):
        for f in code:
            lines = []
            for t, s in zip(f.type.dims, f.subspaces):
                lines.append(f"# dim {t}")
                lines.extend(_row_text(r, q) for r in s.basis)
            blocks.append("\n".join(lines))
    else:
        blocks = ["\n".join(_row_text(r, q) for r in s.basis) for s in code]
    return "\n\n".join(blocks) + "\n"
