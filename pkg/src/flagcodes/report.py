"""Summaries and tables computed from a code alone.

``construct`` and ``analyze`` both print :func:`flag_code_summary`, so a code
written by one and read by the other reproduces the same text.
"""

from __future__ import annotations

from typing import Any

from .cdc import (
    ConstantDimensionCode,
    cdc_min_distance,
    is_max_distance,
    is_partial_spread,
    max_subspace_distance,
    sunflower_center,
)
from .characterization import bound_case_for_route, certify_qodfc, check_dminus4, projected_profile, qodfc_cardinality_bound
from .flags import FlagCode, disjointness_report, flagcode_min_distance, max_flag_distance

__all__ = [
    "flag_code_summary",
    "subspace_code_summary",
    "format_flag_summary",
    "format_subspace_summary",
    "projected_patterns",
    "format_patterns_table",
    "distance_phrase",
]


def distance_phrase(d: int, D: int) -> str:
    if d == D:
        return f"d_f = {d} = D"
    return f"d_f = {d} = D - {D - d}"


def projected_patterns(code: FlagCode) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """Per dimension: is d_S(C_i) the maximum value, and is |C_i| = |C|.

    A projected code with a single member has distance 0 and so never counts
    as maximum here.
    """
    profile = projected_profile(code)
    return tuple(d == top for d, top, _ in profile), tuple(size == len(code) for _, _, size in profile)


def _yes(flags: tuple[bool, ...]) -> str:
    return "(" + ", ".join("YES" if b else "NO" for b in flags) + ")"


def format_patterns_table(rows: list[tuple[str, FlagCode]]) -> str:
    """Rows of: code label, "d_S(C_i) is maximum" pattern, "|C_i| = |C|" pattern."""
    cells = [("Code", "d_S(C_i) is maximum", "|C_i| = |C|")]
    for label, code in rows:
        mx, sz = projected_patterns(code)
        cells.append((label, _yes(mx), _yes(sz)))
    widths = [max(len(r[c]) for r in cells) for c in range(3)]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells) + "\n"


def flag_code_summary(code: FlagCode) -> dict[str, Any]:
    size = len(code)
    D = max_flag_distance(code.type)
    d = flagcode_min_distance(code)
    report = disjointness_report(code)
    profile = projected_profile(code)
    cert = certify_qodfc(code)
    d4 = check_dminus4(code)
    out: dict[str, Any] = {
        "q": code.field.order,
        "n": code.n,
        "type": list(code.type.dims),
        "size": size,
        "distance": d,
        "max_distance": D,
        "projected": [
            {"dim": t, "distance": pd, "max": top, "is_max": pd == top, "size": ps}
            for t, (pd, top, ps) in zip(code.type.dims, profile)
        ],
        "disjoint": report.is_disjoint,
        "collapse_dims": list(report.collapse_dims),
        "qodfc": cert.verdict,
        "qodfc_route": cert.route,
        "dminus4": d4.verdict,
    }
    case = bound_case_for_route(cert.route)
    if case is not None:
        bound = qodfc_cardinality_bound(code.type, code.field.order, case)
        out["bound"] = bound.to_json() | {"satisfied": bound.admits(size)}
    else:
        out["bound"] = None
    return out


def format_flag_summary(s: dict[str, Any]) -> str:
    lines = [f"type ({','.join(map(str, s['type']))}) on GF({s['q']})^{s['n']}, |C| = {s['size']}"]
    if s["size"] < 2:
        lines.append("d_f = 0 (single flag)")
    else:
        lines.append(f"{distance_phrase(s['distance'], s['max_distance'])} (D = {s['max_distance']})")
    lines.append("dim  d_S  max  maximum?  |C_i|  |C_i| = |C|?")
    for p in s["projected"]:
        lines.append(
            f"{p['dim']:<4} {p['distance']:<4} {p['max']:<4} {'YES' if p['is_max'] else 'NO':<9} "
            f"{p['size']:<6} {'YES' if p['size'] == s['size'] else 'NO'}"
        )
    collapses = ", ".join(map(str, s["collapse_dims"])) or "none"
    lines.append(f"disjoint: {'yes' if s['disjoint'] else 'no'} (collapses at: {collapses})")
    verdict = "undefined" if s["qodfc"] is None else str(s["qodfc"]).lower()
    lines.append(f"QODFC: {verdict} ({s['qodfc_route']})")
    lines.append(f"D-4: {'undefined' if s['dminus4'] is None else str(s['dminus4']).lower()}")
    b = s["bound"]
    if b is None:
        lines.append("bound: not applicable")
    else:
        shown = b["value"] if b["value"] is not None else f"{b['expression']} (ceiling {b['ceiling']})"
        lines.append(f"bound: |C| <= {shown}: {'satisfied' if b['satisfied'] else 'VIOLATED'}")
    return "\n".join(lines) + "\n"


def subspace_code_summary(code: ConstantDimensionCode) -> dict[str, Any]:
    center = sunflower_center(code) if len(code) >= 2 else None
    return {
        "q": code.field.order,
        "n": code.n,
        "k": code.k,
        "size": len(code),
        "distance": cdc_min_distance(code),
        "max_distance": max_subspace_distance(code.n, code.k),
        "max_distance_code": is_max_distance(code),
        "partial_spread": is_partial_spread(code),
        "sunflower_center": None if center is None else [list(r) for r in center.basis],
    }


def format_subspace_summary(s: dict[str, Any]) -> str:
    center = s["sunflower_center"]
    if center is None:
        center_text = "none"
    else:
        center_text = "<" + (",".join("".join(map(str, r)) for r in center) or "0") + ">"
    return (
        f"{s['size']} subspaces of dimension {s['k']} in GF({s['q']})^{s['n']}\n"
        f"d_S = {s['distance']} (maximum {s['max_distance']}): {'maximum distance' if s['max_distance_code'] else 'not maximum'}\n"
        f"partial spread: {'yes' if s['partial_spread'] else 'no'}\n"
        f"sunflower center: {center_text}\n"
    )
