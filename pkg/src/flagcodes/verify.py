"""Named verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`SuiteResult` holding one named check per fact
it establishes; a suite passes when every check does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .cdc import is_max_distance, is_partial_spread, sunflower_center, sunflower_quotient_check
from .characterization import (
    bound_case_for_route,
    certify_qodfc,
    check_dminus4,
    check_qodfc_disjoint,
    dminus4_oracle,
    qodfc_cardinality_bound,
    qodfc_oracle,
)
from .constructions import (
    build_c_ell,
    build_flag_variety_line_hyperplane,
    build_max_cdc_high,
    build_qodfc,
    build_qodfc_hyperplane_type,
    build_spread_scaffold,
    build_sunflower,
    truncated_partial_spread,
)
from .field import FieldSpec, make_field
from .flags import (
    FlagCode,
    TypeVector,
    distinguished_type,
    dual_flag_code,
    enumerate_flag_variety,
    flag_distance,
    flag_distance_components,
    flagcode_min_distance,
    lr_indices,
    max_flag_distance,
    projected_flag_code,
)
from .linalg import span_vectors
from .report import projected_patterns
from .sampling import random_flag_code
from .worked_examples import FIVE_FLAG_DISTANCES, FIVE_FLAG_SUBCODES, five_flags_n6, qodfc_examples_n5

__all__ = [
    "Check",
    "SuiteResult",
    "SUITES",
    "GRID_CELLS",
    "grid_types",
    "DISTINGUISHED_TABLE",
    "HYPERPLANE_CASES",
    "suite_worked_examples",
    "suite_equivalence_exhaustive",
    "suite_construction_grid",
    "suite_c_ell_grid",
    "suite_nondisjoint_constructions",
    "suite_bounds",
    "suite_duality",
    "run_suite",
]


@dataclass
class Check:
    name: str
    ok: bool
    detail: Any = None


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: Any = None) -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": len(self.checks),
            "failures": [{"name": c.name, "detail": c.detail} for c in self.failures()],
            "info": self.info,
        }


# (q, k) cells; each runs n = 2k+1 and n = 2k+2
GRID_CELLS = ((2, 2), (2, 3), (3, 2))

# three sub-types per n, each with t_L >= 2; for even n one has t_L = n/2
_SUBTYPES = {
    5: ((2, 3), (1, 2, 4), (2, 3, 4)),
    6: ((3, 4), (1, 2, 4, 5), (2, 3, 5)),
    7: ((2, 3, 5, 6), (1, 3, 4), (3, 5)),
    8: ((4, 5), (1, 2, 6, 7), (2, 3, 4, 6)),
}


def grid_types(n: int) -> list[TypeVector]:
    return [TypeVector(n, tuple(range(1, n)))] + [TypeVector(n, t) for t in _SUBTYPES[n]]


# n = 10: type -> (t_L, t_R, distinguished type)
DISTINGUISHED_TABLE = {
    (1, 2, 4, 6, 8): (4, 6, (2, 4, 6, 8)),
    (1, 2, 4, 6): (4, 6, (2, 4, 6)),
    (1, 2, 4): (4, None, (2, 4)),
    (1, 2, 5, 6, 8): (5, 5, (2, 5, 6)),
    (5, 6, 8): (5, 5, (5, 6)),
    (6, 7, 9): (None, 6, (6, 7)),
}

HYPERPLANE_CASES = ((2, 6, (2, 5)), (2, 5, (1, 2, 4)), (3, 5, (2, 4)))


def _fields(*qs: int) -> dict[int, FieldSpec]:
    return {q: make_field(q) for q in qs}


# --- worked examples --------------------------------------------------------------


def suite_worked_examples() -> SuiteResult:
    res = SuiteResult("paper-examples")
    expected = {"C": (2, 2, 4), "C'": (2, 4, 2), "C''": (2, 2, 2)}
    routes = {"C": "disjoint/case1", "C'": "disjoint/case2", "C''": "disjoint/case3"}
    for q, F in _fields(2, 3).items():
        for name, code in qodfc_examples_n5(F).items():
            cert = certify_qodfc(code)
            res.add(f"n5 {name} q={q}: D = 10", max_flag_distance(code.type) == 10)
            res.add(f"n5 {name} q={q}: d_f = 8", flagcode_min_distance(code) == 8, flagcode_min_distance(code))
            res.add(f"n5 {name} q={q}: projected distances", tuple(cert.projected_distances) == expected[name], cert.projected_distances)
            res.add(f"n5 {name} q={q}: (2,3)-projection d_f = 6", flagcode_min_distance(projected_flag_code(code, (2, 3))) == 6)
            res.add(f"n5 {name} q={q}: route", cert.verdict is True and cert.route == routes[name], cert.route)

    F = make_field(2)
    flags = five_flags_n6(F)
    for (i, j), comps in FIVE_FLAG_DISTANCES.items():
        got = flag_distance_components(flags[i - 1], flags[j - 1])
        res.add(f"n6 d_f(F{i},F{j}) = {'+'.join(map(str, comps))}", got == comps, got)
    code = FlagCode.of(flags)
    res.add("n6 D = 12", max_flag_distance(code.type) == 12)
    res.add("n6 d_f = 8 = D - 4", flagcode_min_distance(code) == 8)

    for dims, (tl, tr, dist) in DISTINGUISHED_TABLE.items():
        t = TypeVector(10, dims)
        L, R = lr_indices(t)
        got = (t.t(L) if L else None, t.t(R) if R else None, distinguished_type(t).dims)
        res.add(f"n10 {t}: t_L, t_R, distinguished", got == (tl, tr, dist), got)

    for members, (mx, sz) in FIVE_FLAG_SUBCODES.items():
        sub = FlagCode.of(flags[i - 1] for i in members)
        got = projected_patterns(sub)
        res.add(f"n6 sub-code {members} patterns", got == (mx, sz), got)
        res.add(f"n6 sub-code {members} is D - 4", dminus4_oracle(sub) and check_dminus4(sub).verdict is True)
    return res


# --- exhaustive equivalence ---------------------------------------------------------


def suite_equivalence_exhaustive(q: int = 2, n: int = 4, dims: tuple[int, ...] = (1, 2, 3), cap: int | None = 100_000) -> SuiteResult:
    """Every two-flag code of one type: theorem-based checkers against the oracles."""
    F = make_field(q) if isinstance(q, int) else q
    t = TypeVector(n, dims)
    res = SuiteResult("equivalence-exhaustive")
    flags = enumerate_flag_variety(F, t, cap=cap)
    D = max_flag_distance(t)
    counts = {"codes": 0, "qodfc": 0, "dminus4": 0, "qodfc_mismatch": 0, "dminus4_mismatch": 0}
    routes: dict[str, int] = {}
    quantifier = {"some": 0, "all": 0}
    strict_mismatch = 0
    bad_collapse = []
    first_mismatch: list[Any] = []
    for a in range(len(flags)):
        for b in range(a + 1, len(flags)):
            code = FlagCode(t, (flags[a], flags[b]))
            counts["codes"] += 1
            d = flag_distance(flags[a], flags[b])
            oracle_q, oracle_4 = d == D - 2, d == D - 4
            cert = certify_qodfc(code)
            d4 = check_dminus4(code)
            routes[cert.route] = routes.get(cert.route, 0) + 1
            counts["qodfc"] += oracle_q
            counts["dminus4"] += oracle_4
            if cert.verdict != oracle_q:
                counts["qodfc_mismatch"] += 1
                first_mismatch.append(("qodfc", a, b, cert.route))
            if d4.verdict != oracle_4:
                counts["dminus4_mismatch"] += 1
                first_mismatch.append(("dminus4", a, b))
            matched = cert.details.get("matched_clauses", [])
            if 3 in matched:
                quantifier[cert.details["clause3_quantifier"]] += 1
                # the strict reading needs both projected codes smaller
                strict = any(c in matched for c in (1, 2)) or cert.details["clause3_quantifier"] == "all"
                strict_mismatch += strict != oracle_q
            if oracle_q and not set(cert.collapse_dims) <= {1, n - 1}:
                bad_collapse.append((a, b))
            if oracle_4 and not set(d4.collapse_dims) <= {1, 2, n - 2, n - 1}:
                bad_collapse.append((a, b))
    res.info = counts | {
        "routes": dict(sorted(routes.items())),
        "clause3_reading": "some",
        "clause3_quantifier_counts": quantifier,
        "clause3_strict_reading_mismatches": strict_mismatch,
    }
    res.add("QODFC oracle and checkers agree", counts["qodfc_mismatch"] == 0, first_mismatch[:5])
    res.add("D-4 oracle and checker agree", counts["dminus4_mismatch"] == 0, first_mismatch[:5])
    res.add("collapse dimensions restricted", not bad_collapse, bad_collapse[:5])
    return res


# --- construction grid ----------------------------------------------------------------


def _grid(qs=GRID_CELLS):
    fields = {}
    for q, k in qs:
        F = fields.setdefault(q, make_field(q))
        for n in (2 * k + 1, 2 * k + 2):
            for t in grid_types(n):
                yield q, k, n, F, t


def suite_construction_grid(cells=GRID_CELLS) -> SuiteResult:
    res = SuiteResult("construction-grid")
    for q, k, n, F, t in _grid(cells):
        tag = f"q={q} n={n} t={t}"
        code = build_qodfc(F, t, checked=False)
        res.add(f"{tag}: |C| = q^k + 1", len(code) == q**k + 1, len(code))
        res.add(f"{tag}: oracle d_f = D - 2", qodfc_oracle(code))
        cert = check_qodfc_disjoint(code)
        res.add(f"{tag}: disjoint checker", cert.verdict is True, cert.route)
        case = bound_case_for_route(cert.route)
        bound = qodfc_cardinality_bound(t, q, case)
        res.add(f"{tag}: cardinality bound", bound.admits(len(code)), bound.to_json())
        mx, _ = projected_patterns(code)
        res.add(f"{tag}: only C_L loses distance", [i + 1 for i, b in enumerate(mx) if not b] == [lr_indices(t).L])
    return res


def suite_c_ell_grid(cells=GRID_CELLS) -> SuiteResult:
    res = SuiteResult("c-ell-grid")
    for q, k, n, F, t in _grid(cells):
        D = max_flag_distance(t)
        L = lr_indices(t).L
        first = build_qodfc(F, t, checked=False)
        for ell in range(1, L + 1):
            code = build_c_ell(F, t, ell, checked=False)
            d = flagcode_min_distance(code)
            res.add(f"q={q} n={n} t={t} l={ell}: d_f = D - 2l", d == D - 2 * ell, d)
            if ell == 1:
                res.add(f"q={q} n={n} t={t}: C(1) equals the QODFC construction", code.flags == first.flags)
    return res


def suite_nondisjoint_constructions() -> SuiteResult:
    res = SuiteResult("non-disjoint-constructions")
    for q, n, dims in HYPERPLANE_CASES:
        t = TypeVector(n, dims)
        code = build_qodfc_hyperplane_type(make_field(q), t, checked=False)
        last = len({f[t.r] for f in code})
        res.add(f"hyperplane q={q} n={n} t={t}: d_f = D - 2", qodfc_oracle(code))
        res.add(f"hyperplane q={q} n={n} t={t}: |C_r| < |C|", last < len(code), (last, len(code)))
        cert = certify_qodfc(code)
        res.add(f"hyperplane q={q} n={n} t={t}: checker", cert.verdict is True, cert.route)
    var = build_flag_variety_line_hyperplane(make_field(2), 3, checked=False)
    res.add("variety q=2 n=3: 21 flags", len(var) == 21, len(var))
    res.add("variety q=2 n=3: d_f = 2", flagcode_min_distance(var) == 2)
    return res


# --- bounds ---------------------------------------------------------------------------


def suite_bounds() -> SuiteResult:
    res = SuiteResult("bounds")
    b = qodfc_cardinality_bound(TypeVector(10, (2, 4, 6, 8)), 2, "disjoint")
    res.add("t=(2,4,6,8) n=10 q=2: disjoint bound 341", b.value == 341, b.to_json())
    v = qodfc_cardinality_bound(TypeVector(3, (1, 2)), 2, "nondisjoint-variety")
    res.add("t=(1,2) n=3 q=2: variety bound 21", v.value == 21, v.to_json())
    built: list[tuple[str, FlagCode]] = []
    for q, k, n, F, t in _grid():
        built.append((f"qodfc q={q} n={n} t={t}", build_qodfc(F, t, checked=False)))
    for q, n, dims in HYPERPLANE_CASES:
        built.append((f"hyperplane q={q} n={n} t={dims}", build_qodfc_hyperplane_type(make_field(q), TypeVector(n, dims), checked=False)))
    built.append(("variety q=2 n=3", build_flag_variety_line_hyperplane(make_field(2), 3, checked=False)))
    for name, code in built:
        cert = certify_qodfc(code)
        case = bound_case_for_route(cert.route)
        bound = qodfc_cardinality_bound(code.type, code.field.order, case)
        res.add(f"{name}: |C| = {len(code)} within bound", bound.admits(len(code)), bound.to_json())
    return res


# --- duality and builder predicates ---------------------------------------------------------


def suite_duality(samples: int = 100, seed: int = 0) -> SuiteResult:
    res = SuiteResult("duality")
    rng = random.Random(seed)
    F2 = make_field(2)
    types = [TypeVector(5, (1, 2, 3)), TypeVector(6, (1, 2, 4, 5)), TypeVector(4, (1, 3)), TypeVector(6, (2, 3))]
    bad = []
    for s in range(samples):
        t = types[s % len(types)]
        code = random_flag_code(F2, t, rng.randint(2, 5), rng, share_prob=0.4)
        dual = dual_flag_code(code)
        if (len(dual), flagcode_min_distance(dual)) != (len(code), flagcode_min_distance(code)):
            bad.append(s)
        elif dual_flag_code(dual).flags != code.flags:
            bad.append(s)
    res.add(f"{samples} random codes: |C^perp| = |C|, d_f(C^perp) = d_f(C), involution", not bad, bad[:5])
    return res


def builder_predicate_checks(cells=GRID_CELLS) -> SuiteResult:
    """Spread, sunflower and max-distance predicates on every scaffold-derived code."""
    res = SuiteResult("builder-predicates")
    fields = {}
    for q, k in cells:
        F = fields.setdefault(q, make_field(q))
        for n in (2 * k + 1, 2 * k + 2):
            sc = build_spread_scaffold(F, k, n)
            res.add(f"q={q} k={k} n={n}: spread", is_partial_spread(truncated_partial_spread(sc, k)) and sc.size == q**k + 1)
            for j in range(1, k + 1):
                res.add(f"q={q} k={k} n={n} j={j}: truncation is a partial spread", is_partial_spread(truncated_partial_spread(sc, j)))
                high = build_max_cdc_high(sc, j)
                res.add(f"q={q} k={k} n={n} j={j}: high code has maximum distance", is_max_distance(high))
                if j < n // 2:
                    sf = build_sunflower(sc, j)
                    u = span_vectors(F, n, 2 * k + 1)
                    res.add(f"q={q} k={k} n={n} j={j}: sunflower center <u>", sunflower_center(sf) == u)
                    res.add(f"q={q} k={k} n={n} j={j}: sunflower quotient", sunflower_quotient_check(sf, u))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "paper-examples": suite_worked_examples,
    "equivalence-exhaustive": suite_equivalence_exhaustive,
    "construction-grid": lambda: _merge(
        "construction-grid", suite_construction_grid(), suite_c_ell_grid(), suite_nondisjoint_constructions(), builder_predicate_checks()
    ),
    "bounds": suite_bounds,
    "duality": suite_duality,
}


def _merge(name: str, *parts: SuiteResult) -> SuiteResult:
    out = SuiteResult(name)
    for p in parts:
        out.checks.extend(p.checks)
        out.info[p.name] = p.passed
    return out


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    return SUITES[name](**kwargs)
