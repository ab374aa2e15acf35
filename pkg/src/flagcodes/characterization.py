"""Quasi-optimum (D - 2) and D - 4 flag codes: oracles, structural checkers, bounds.

The ``*_oracle`` functions compute the minimum distance of the whole code by
brute force.  The ``check_*`` functions decide the same property from the
projected codes alone (max-distance predicates, cardinalities and the
distance of a short central projection) and never call an oracle, so the two
routes can be compared against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .cdc import CodeError, gaussian_binomial, is_max_distance, max_subspace_distance
from .flags import (
    Flag,
    FlagCode,
    TypeVector,
    closest_flags,
    disjointness_report,
    distinguished_indices,
    dual_flag_code,
    flag_distance,
    flag_distance_components,
    flag_variety_size,
    lr_indices,
    max_flag_distance,
    projected_flag_code,
    projected_subspace_code,
    flagcode_min_distance,
)

__all__ = [
    "Certificate",
    "BoundDescriptor",
    "PropagationReport",
    "BOUND_CASES",
    "qodfc_oracle",
    "dminus4_oracle",
    "check_qodfc_disjoint",
    "check_qodfc_nondisjoint",
    "certify_qodfc",
    "check_dminus4",
    "nonmax_propagation_check",
    "qodfc_cardinality_bound",
    "bound_case_for_route",
    "projected_profile",
]

SINGLETON = "undefined (singleton)"
BOUND_CASES = ("disjoint", "nondisjoint-line", "nondisjoint-hyperplane", "nondisjoint-variety")


@dataclass
class Certificate:
    """A verdict with the evidence needed to re-check it from the code."""

    verdict: bool | None
    route: str
    projected_distances: list[int]
    collapse_dims: list[int]
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    bounds: dict[str, Any] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "route": self.route,
            "projected_distances": list(self.projected_distances),
            "collapse_dims": list(self.collapse_dims),
            "witnesses": list(self.witnesses),
            "bounds": dict(self.bounds),
            "details": dict(self.details),
        }


@dataclass
class BoundDescriptor:
    case: str
    expression: str
    value: int | None  # closed form, None when only A_q quantities apply
    ceiling: int  # always-numeric fallback (Grassmannian or variety size)
    alternative: int | None = None  # the other reading of the disjoint bound, when it differs
    note: str = ""

    def admits(self, size: int) -> bool:
        return size <= (self.value if self.value is not None else self.ceiling)

    def to_json(self) -> dict[str, Any]:
        out = {"case": self.case, "expression": self.expression, "value": self.value, "ceiling": self.ceiling}
        if self.alternative is not None:
            out["alternative"] = self.alternative
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class PropagationReport:
    is_max: tuple[bool, ...]
    holds: bool
    violations: list[tuple[int, int]]  # (non-max index, index that should also be non-max)


# --- helpers ------------------------------------------------------------------


def _require_pair(code: FlagCode) -> None:
    if len(code) < 2:
        raise CodeError(
            "the property is undefined for a single flag: d_f = 0 by convention, "
            "so it would hold vacuously exactly when D = 2"
        )


def projected_profile(code: FlagCode) -> list[tuple[int, int, int]]:
    """Per index i: (d_S(C_i), maximum possible distance, |C_i|)."""
    out = []
    for i in range(1, code.type.r + 1):
        proj = projected_subspace_code(code, i)
        d = _cdc_distance(proj)
        out.append((d, max_subspace_distance(code.n, code.type.t(i)), len(proj)))
    return out


def _cdc_distance(proj) -> int:
    from .cdc import cdc_min_distance

    return cdc_min_distance(proj)


def _witness(code: FlagCode, i: int, j: int, reason: str) -> dict[str, Any]:
    return {
        "flags": [i, j],
        "reason": reason,
        "distance": flag_distance(code.flags[i], code.flags[j]),
        "components": list(flag_distance_components(code.flags[i], code.flags[j])),
    }


def _projection_distance(code: FlagCode, indices: tuple[int, ...]) -> tuple[int, int, tuple[int, int] | None]:
    """(d_f of the projection, its own D, indices into ``code.flags`` of a closest pair)."""
    proj = projected_flag_code(code, indices)
    d, pair = closest_flags(proj)
    if pair is None:
        return d, max_flag_distance(proj.type), None
    a, b = proj.flags[pair[0]], proj.flags[pair[1]]
    # map back to one pair of original flags realising the projected pair
    first = next(k for k, f in enumerate(code.flags) if all(f[i] == s for i, s in zip(indices, a.subspaces)))
    second = next(k for k, f in enumerate(code.flags) if all(f[i] == s for i, s in zip(indices, b.subspaces)))
    return d, max_flag_distance(proj.type), (min(first, second), max(first, second))


def _base_certificate(code: FlagCode) -> tuple[list[tuple[int, int, int]], Any]:
    return projected_profile(code), disjointness_report(code)


def _dualized(checker, code: FlagCode, **kwargs) -> Certificate:
    """Run ``checker`` on C^⊥ and express the evidence in terms of C."""
    dual = dual_flag_code(code)
    cert = checker(dual, auto_dualize=False, **kwargs)
    n = code.n
    cert.projected_distances = list(reversed(cert.projected_distances))
    cert.collapse_dims = sorted(n - t for t in cert.collapse_dims)
    cert.details["dualized"] = True
    cert.details["dual_type"] = list(dual.type.dims)
    # witness indices refer to the dual code's sorted flags; remap them
    position = {f: k for k, f in enumerate(code.flags)}
    from .flags import dual_flag

    for w in cert.witnesses:
        w["flags"] = sorted(position[dual_flag(dual.flags[k])] for k in w["flags"])
    return cert


# --- oracles ------------------------------------------------------------------


def qodfc_oracle(code: FlagCode) -> bool:
    _require_pair(code)
    return flagcode_min_distance(code) == max_flag_distance(code.type) - 2


def dminus4_oracle(code: FlagCode) -> bool:
    _require_pair(code)
    return flagcode_min_distance(code) == max_flag_distance(code.type) - 4


# --- QODFC checkers -----------------------------------------------------------


def check_qodfc_disjoint(code: FlagCode) -> Certificate:
    """Disjoint codes: QODFC exactly when the distinguished projection is one.

    The equivalent form (C_{L-1}, C_{R+1} of maximum distance and C_(L,R) at
    its own D - 2) is evaluated too and stored as ``structural_route``.
    """
    profile, report = _base_certificate(code)
    distances = [p[0] for p in profile]
    if len(code) < 2:
        return Certificate(None, SINGLETON, distances, [])
    if not report.is_disjoint:
        raise CodeError(f"code is not disjoint (collapses at dimensions {list(report.collapse_dims)})")
    t = code.type
    L, R = lr_indices(t)
    details: dict[str, Any] = {"L": L, "R": R}
    witnesses: list[dict[str, Any]] = []

    outer_ok = True
    for idx in ([L - 1] if L is not None and L >= 2 else []) + ([R + 1] if R is not None and R < t.r else []):
        ok = is_max_distance(projected_subspace_code(code, idx))
        details[f"max_distance_at_{t.t(idx)}"] = ok
        outer_ok &= ok

    central = tuple(sorted({i for i in (L, R) if i is not None}))
    d_central, target_max, pair = _projection_distance(code, central)
    details["central_type"] = [t.t(i) for i in central]
    details["central_distance"] = d_central
    details["central_max"] = target_max
    if pair is not None:
        witnesses.append(_witness(code, *pair, "closest pair of the central projection"))

    dist_idx = distinguished_indices(t)
    d_dist, dist_max, _ = _projection_distance(code, dist_idx)
    details["distinguished_type"] = [t.t(i) for i in dist_idx]
    details["distinguished_distance"] = d_dist
    details["distinguished_is_qodfc"] = d_dist == dist_max - 2

    # the distinguished projection decides; the max-distance route must agree with it
    verdict = details["distinguished_is_qodfc"]
    details["structural_route"] = outer_ok and d_central == target_max - 2
    loss = {i: profile[i - 1][0] < profile[i - 1][1] for i in central}
    if not verdict:
        route = "disjoint/not-qodfc"
    elif L is not None and L == R:
        route = "disjoint/middle"
    else:
        lost_L = L is not None and loss.get(L, False)
        lost_R = R is not None and loss.get(R, False)
        route = "disjoint/case3" if lost_L and lost_R else "disjoint/case1" if lost_L else "disjoint/case2"
    bound = qodfc_cardinality_bound(t, code.field.order, "disjoint")
    bounds = bound.to_json() | {"satisfied": bound.admits(len(code))}
    return Certificate(verdict, route, distances, [], witnesses, bounds, details)


def check_qodfc_nondisjoint(code: FlagCode) -> Certificate:
    """Non-disjoint codes: collapses only at a line or a hyperplane, in one of three shapes."""
    profile, report = _base_certificate(code)
    distances = [p[0] for p in profile]
    if len(code) < 2:
        return Certificate(None, SINGLETON, distances, [])
    if report.is_disjoint:
        raise CodeError("code is disjoint; use the disjoint checker")
    t, n, size = code.type, code.n, len(code)
    r = t.r
    sizes = report.projected_sizes
    witnesses = [_witness(code, *pair, f"collapse at dimension {dim}") for dim, pair in sorted(report.witnesses.items())]
    details: dict[str, Any] = {"projected_sizes": list(sizes)}

    def pair_is_qodfc(indices: tuple[int, int]) -> bool:
        d, top, _ = _projection_distance(code, indices)
        return d == top - 2

    matched = []
    if r >= 2 and t.t(1) == 1 and 2 * t.t(2) > n:
        ok = sizes[0] < size and sizes[1] == size
        if r >= 3:
            ok = ok and sizes[2] == size and is_max_distance(projected_subspace_code(code, 3))
        if ok and pair_is_qodfc((1, 2)):
            matched.append(1)
    if r >= 2 and t.t(r) == n - 1 and 2 * t.t(r - 1) < n:
        ok = sizes[r - 1] < size and sizes[r - 2] == size
        if r >= 3:
            ok = ok and sizes[r - 3] == size and is_max_distance(projected_subspace_code(code, r - 2))
        if ok and pair_is_qodfc((r - 1, r)):
            matched.append(2)
    if t.dims == (1, n - 1):
        smaller = [i for i in (1, 2) if sizes[i - 1] < size]
        # distinct flags never share both components, so only the sizes matter
        if smaller:
            matched.append(3)
            details["clause3_quantifier"] = "all" if len(smaller) == 2 else "some"
    details["matched_clauses"] = matched
    verdict = bool(matched)
    route = f"non-disjoint/clause{matched[0]}" if matched else "non-disjoint/not-qodfc"
    if verdict:
        case = {1: "nondisjoint-line", 2: "nondisjoint-hyperplane", 3: "nondisjoint-variety"}[matched[-1] if 3 in matched else matched[0]]
        bound = qodfc_cardinality_bound(t, code.field.order, case)
        bounds = bound.to_json() | {"satisfied": bound.admits(size)}
    else:
        bounds = {}
    return Certificate(verdict, route, distances, list(report.collapse_dims), witnesses, bounds, details)


def certify_qodfc(code: FlagCode, auto_dualize: bool = True) -> Certificate:
    """Route to the disjoint or non-disjoint checker.

    Types with every dimension above n/2 are handled on the dual type when
    ``auto_dualize`` is set; the certificate records it.
    """
    if auto_dualize and lr_indices(code.type).L is None and len(code) >= 2:
        return _dualized(certify_qodfc, code)
    if len(code) < 2:
        cert = check_qodfc_disjoint(code)
    elif disjointness_report(code).is_disjoint:
        cert = check_qodfc_disjoint(code)
    else:
        cert = check_qodfc_nondisjoint(code)
    cert.details.setdefault("dualized", False)
    return cert


# --- D - 4 --------------------------------------------------------------------


def check_dminus4(code: FlagCode, auto_dualize: bool = True) -> Certificate:
    """Central projection at its own D - 4, and C_{L-2}, C_{R+2} of maximum distance and full size."""
    if auto_dualize and lr_indices(code.type).L is None and len(code) >= 2:
        return _dualized(check_dminus4, code)
    profile, report = _base_certificate(code)
    distances = [p[0] for p in profile]
    if len(code) < 2:
        return Certificate(None, SINGLETON, distances, list(report.collapse_dims), details={"dualized": False})
    t, n, size = code.type, code.n, len(code)
    L, R = lr_indices(t)
    details: dict[str, Any] = {"L": L, "R": R, "dualized": False}
    witnesses: list[dict[str, Any]] = []

    central = distinguished_indices(t)
    d_central, central_max, pair = _projection_distance(code, central)
    details["central_type"] = [t.t(i) for i in central]
    details["central_distance"] = d_central
    details["central_max"] = central_max
    if pair is not None:
        witnesses.append(_witness(code, *pair, "closest pair of the central projection"))
    ok = d_central == central_max - 4

    outer = []
    if L is not None and L - 2 >= 1:
        outer.append(L - 2)
    if R is not None and R + 2 <= t.r:
        outer.append(R + 2)
    for idx in outer:
        proj = projected_subspace_code(code, idx)
        good = len(proj) == size and is_max_distance(proj)
        details[f"outer_{t.t(idx)}_max_and_full"] = good
        ok = ok and good

    # sanity cross-checks on the witnesses
    extreme = {1, 2, n - 2, n - 1}
    details["collapses_within_extremes"] = set(report.collapse_dims) <= extreme
    r = t.r
    line_hyper = []
    if t.t(1) == 1 and t.t(r) == n - 1 and r >= 2:
        D = max_flag_distance(t)
        for i, j in code.index_pairs():
            a, b = code.flags[i], code.flags[j]
            if a[1] == b[1] and a[r] == b[r]:
                line_hyper.append({"flags": [i, j], "within_bound": flag_distance(a, b) <= D - 2 * r})
    details["line_and_hyperplane_collapses"] = line_hyper
    route = "D-4" if ok else "D-4/not"
    return Certificate(ok, route, distances, list(report.collapse_dims), witnesses, {}, details)


def nonmax_propagation_check(a: Flag, b: Flag) -> PropagationReport:
    """Non-maximal components spread toward L from below and toward R from above."""
    comps = flag_distance_components(a, b)
    t = a.type
    is_max = tuple(d == max_subspace_distance(t.n, dim) for d, dim in zip(comps, t.dims))
    L, R = lr_indices(t)
    violations = []
    for i in range(1, t.r + 1):
        if is_max[i - 1]:
            continue
        if L is not None and i <= L:
            violations += [(i, j) for j in range(i, L + 1) if is_max[j - 1]]
        if R is not None and i >= R:
            violations += [(i, j) for j in range(R, i + 1) if is_max[j - 1]]
    return PropagationReport(is_max, not violations, violations)


# --- cardinality bounds ---------------------------------------------------------


def _floor_bound(q: int, n: int, e: int) -> int:
    return (q**n - 1) // (q**e - 1)


def qodfc_cardinality_bound(type: TypeVector, q: int, case: str) -> BoundDescriptor:
    """Closed-form size bound for a QODFC of the given type and structure.

    ``case`` is one of :data:`BOUND_CASES`.  Where only A_q(n, k, d) values
    apply the bound is returned symbolically with a numeric ceiling.
    """
    n, t = type.n, type
    r = t.r
    if case == "disjoint":
        L, R = lr_indices(t)
        terms, parts = [], []
        if L is not None and L >= 2:
            a = t.t(L - 1)
            terms.append(_floor_bound(q, n, a))
            parts.append(f"floor((q^{n}-1)/(q^{a}-1))")
        if R is not None and R < r:
            b = n - t.t(R + 1)
            terms.append(_floor_bound(q, n, b))
            parts.append(f"floor((q^{n}-1)/(q^{b}-1))")
        if terms:
            value = min(terms)
            alternative = None
            if len(terms) == 2:
                # as printed, both terms use t_{L-1}
                a = t.t(L - 1)
                printed = min(_floor_bound(q, n, a), _floor_bound(q, n, n - a))
                alternative = printed if printed != value else None
            note = "" if alternative is None else "alternative: second term with exponent n - t_{L-1}"
            return BoundDescriptor(case, "min{" + ", ".join(parts) + "}", value, value, alternative, note)
        dims = sorted({t.t(i) for i in (L, R) if i is not None})
        symbols = []
        for d in dims:
            dd = 2 * d - 2 if 2 * d <= n else 2 * (n - d) - 2
            symbols.append(f"A_q({n}, {d}, {dd})")
        ceiling = min(gaussian_binomial(q, n, d) for d in dims)
        return BoundDescriptor(case, "min{" + ", ".join(symbols) + "}", None, ceiling)
    if case == "nondisjoint-variety":
        if t.dims != (1, n - 1):
            raise CodeError(f"the flag-variety bound needs type (1, n-1), got {t}")
        value = flag_variety_size(q, t)
        return BoundDescriptor(case, f"(q^{n}-1)/(q-1) * (q^{n - 1}-1)/(q-1)", value, value)
    if case == "nondisjoint-line":
        if not (r >= 2 and t.t(1) == 1 and 2 * t.t(2) > n):
            raise CodeError(f"type {t} is not of the form (1, t_2, ...) with t_2 > n/2")
        if r >= 3:
            e = n - t.t(3)
            value = _floor_bound(q, n, e)
            return BoundDescriptor(case, f"A_q({n}, {t.t(3)}, {2 * e}) <= floor((q^{n}-1)/(q^{e}-1))", value, value)
        if t.dims == (1, n - 1):
            return qodfc_cardinality_bound(t, q, "nondisjoint-variety")
        d = t.t(2)
        return BoundDescriptor(case, f"A_q({n}, {d}, {2 * (n - d) - 2})", None, gaussian_binomial(q, n, d))
    if case == "nondisjoint-hyperplane":
        if not (r >= 2 and t.t(r) == n - 1 and 2 * t.t(r - 1) < n):
            raise CodeError(f"type {t} is not of the form (..., t_(r-1), n-1) with t_(r-1) < n/2")
        if r >= 3:
            e = t.t(r - 2)
            value = _floor_bound(q, n, e)
            return BoundDescriptor(case, f"A_q({n}, {e}, {2 * e}) <= floor((q^{n}-1)/(q^{e}-1))", value, value)
        if t.dims == (1, n - 1):
            return qodfc_cardinality_bound(t, q, "nondisjoint-variety")
        d = t.t(r - 1)
        return BoundDescriptor(case, f"A_q({n}, {d}, {2 * d - 2})", None, gaussian_binomial(q, n, d))
    raise CodeError(f"unknown bound case {case!r}; expected one of {BOUND_CASES}")


def bound_case_for_route(route: str) -> str | None:
    if route.startswith("disjoint/") and route != "disjoint/not-qodfc":
        return "disjoint"
    return {
        "non-disjoint/clause1": "nondisjoint-line",
        "non-disjoint/clause2": "nondisjoint-hyperplane",
        "non-disjoint/clause3": "nondisjoint-variety",
    }.get(route)
