"""Command-line front end: ``flagcodes construct|analyze|verify|bound|enumerate``.

Exit status: 0 on success, 1 when a verification suite fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cdc import CodeError, ConstantDimensionCode, enumerate_grassmannian
from .characterization import BOUND_CASES, certify_qodfc, check_dminus4, qodfc_cardinality_bound
from .constructions import (
    ConstructionError,
    build_c_ell,
    build_flag_variety_line_hyperplane,
    build_max_cdc_high,
    build_qodfc,
    build_qodfc_hyperplane_type,
    build_spread_scaffold,
    build_sunflower,
    truncated_partial_spread,
)
from .field import FieldError, FieldSpec, make_field, split_prime_power
from .flags import FlagCode, FlagError, TypeVector, enumerate_flag_variety
from .io import IOFormatError, dump_json, flag_code_to_json, load_code, matrix_dump, subspace_code_to_json, write_json
from .report import (
    flag_code_summary,
    format_flag_summary,
    format_patterns_table,
    format_subspace_summary,
    subspace_code_summary,
)
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser", "CONSTRUCTIONS"]

CONSTRUCTIONS = ("qodfc", "c-ell", "hyperplane", "variety-1-nm1", "spread", "sunflower", "max-cdc")

USAGE_ERRORS = (FieldError, FlagError, CodeError, ConstructionError, IOFormatError)


class UsageError(ValueError):
    pass


def _add_field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, help="field order (a prime, or a prime power with the default modulus)")
    p.add_argument("--p", type=int, help="characteristic")
    p.add_argument("--m", type=int, default=1, help="extension degree (with --p)")
    p.add_argument("--modulus", help="comma-separated modulus coefficients, x^0 first (with --p/--m)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="output path")
    p.add_argument("--format", choices=("json", "text"), default="text", help="stdout format")
    p.add_argument("--cap", type=int, default=100_000, help="enumeration cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagcodes", description="Construct, analyze and verify flag codes over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and write it as JSON")
    c.add_argument("construction", choices=CONSTRUCTIONS)
    _add_field_args(c)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--type", help="type vector, e.g. 1,2,3")
    c.add_argument("--k", type=int, help="spread parameter")
    c.add_argument("--j", type=int, help="truncation / sunflower / high-code parameter")
    c.add_argument("--ell", type=int, help="number of sunflower dimensions for c-ell")
    c.add_argument("--checked", action=argparse.BooleanOptionalAction, default=None, help="verify the distance at build time (default: when small)")
    c.add_argument("--dump", help="also write a plain matrix dump to this path")
    _add_common(c)

    a = sub.add_parser("analyze", help="certify a code file")
    a.add_argument("path")
    _add_common(a)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    _add_field_args(v)
    v.add_argument("--n", type=int)
    v.add_argument("--type")
    _add_common(v)

    b = sub.add_parser("bound", help="cardinality bound for a QODFC of a type")
    _add_field_args(b)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--type", required=True)
    b.add_argument("--case", choices=BOUND_CASES, default="disjoint")
    _add_common(b)

    e = sub.add_parser("enumerate", help="list a Grassmannian or the (1, n-1) flag variety")
    e.add_argument("what", choices=("grassmannian", "variety"))
    _add_field_args(e)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, help="subspace dimension for grassmannian")
    _add_common(e)
    return parser


def _field(args) -> FieldSpec:
    if args.q is not None and args.p is not None:
        raise UsageError("give either --q or --p/--m, not both")
    if args.q is not None:
        if args.q < 2:
            raise UsageError(f"--q must be a prime power >= 2, got {args.q}")
        p, m = split_prime_power(args.q)
        return make_field(p, m)
    if args.p is not None:
        modulus = None
        if args.modulus:
            try:
                modulus = [int(x) for x in args.modulus.split(",")]
            except ValueError as exc:
                raise UsageError(f"cannot parse --modulus {args.modulus!r}") from exc
        return make_field(args.p, args.m, modulus)
    raise UsageError("a field is required: --q or --p")


def _type(args, required: bool = True) -> TypeVector | None:
    if args.type is None:
        if required:
            raise UsageError("--type is required")
        return None
    if args.n is None:
        raise UsageError("--n is required with --type")
    return TypeVector.parse(args.n, args.type)


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for construction {args.construction!r}")
    return value


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        sys.stdout.write(dump_json(payload))
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    F = _field(args)
    name = args.construction
    code: FlagCode | ConstantDimensionCode
    if name in ("spread", "sunflower", "max-cdc"):
        sc = build_spread_scaffold(F, _need(args, "k"), args.n)
        if name == "spread":
            code = truncated_partial_spread(sc, args.j if args.j is not None else sc.k)
        elif name == "sunflower":
            code = build_sunflower(sc, _need(args, "j"))
        else:
            code = build_max_cdc_high(sc, _need(args, "j"))
        data, summary = subspace_code_to_json(code), subspace_code_summary(code)
        text = format_subspace_summary(summary)
    else:
        if name == "variety-1-nm1":
            code = build_flag_variety_line_hyperplane(F, args.n, cap=args.cap, checked=args.checked)
        else:
            t = _type(args)
            if name == "qodfc":
                code = build_qodfc(F, t, checked=args.checked)
            elif name == "c-ell":
                code = build_c_ell(F, t, _need(args, "ell"), checked=args.checked)
            else:
                code = build_qodfc_hyperplane_type(F, t, checked=args.checked)
        data, summary = flag_code_to_json(code), flag_code_summary(code)
        text = format_flag_summary(summary)
    if args.out:
        write_json(args.out, data)
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(matrix_dump(code))
    _emit(args, text, summary)
    return 0


def cmd_analyze(args) -> int:
    code, warnings = load_code(args.path)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if isinstance(code, ConstantDimensionCode):
        summary = subspace_code_summary(code)
        _emit(args, format_subspace_summary(summary), summary)
        return 0
    summary = flag_code_summary(code)
    cert = certify_qodfc(code)
    d4 = check_dminus4(code)
    payload = {"qodfc": cert.to_json(), "dminus4": d4.to_json()}
    if args.out:
        write_json(args.out, payload)
    text = format_flag_summary(summary) + "\n" + format_patterns_table([(f"|C| = {len(code)}", code)])
    _emit(args, text, {"summary": summary, "certificates": payload})
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "equivalence-exhaustive":
        if args.q is not None or args.p is not None:
            kwargs["q"] = _field(args)
        t = _type(args, required=False)
        if t is not None:
            kwargs.update(n=t.n, dims=t.dims)
        kwargs["cap"] = args.cap
    elif args.type is not None or args.q is not None:
        raise UsageError(f"suite {args.suite!r} takes no field or type parameters")
    result = run_suite(args.suite, **kwargs)
    payload = result.to_json()
    if args.out:
        write_json(args.out, payload)
    lines = [f"{args.suite}: {'PASS' if result.passed else 'FAIL'} ({len(result.checks)} checks, {len(result.failures())} failed)"]
    lines += [f"  FAIL {c.name}: {c.detail}" for c in result.failures()]
    if result.info:
        lines.append("  " + json.dumps(result.info, sort_keys=False))
    _emit(args, "\n".join(lines) + "\n", payload)
    return 0 if result.passed else 1


def cmd_bound(args) -> int:
    F = _field(args)
    bound = qodfc_cardinality_bound(_type(args), F.order, args.case)
    payload = bound.to_json()
    shown = bound.value if bound.value is not None else f"symbolic (numeric ceiling {bound.ceiling})"
    text = f"{bound.expression}\nvalue: {shown}\n"
    if bound.alternative is not None:
        text += f"alternative reading: {bound.alternative}\n"
    if args.out:
        write_json(args.out, payload)
    _emit(args, text, payload)
    return 0


def cmd_enumerate(args) -> int:
    F = _field(args)
    if args.what == "grassmannian":
        if args.k is None:
            raise UsageError("--k is required for grassmannian")
        code = ConstantDimensionCode.of(enumerate_grassmannian(F, args.n, args.k, cap=args.cap), field=F, n=args.n, k=args.k)
        data = subspace_code_to_json(code)
    else:
        t = TypeVector(args.n, (1, args.n - 1))
        code = FlagCode.of(enumerate_flag_variety(F, t, cap=args.cap), type=t)
        data = flag_code_to_json(code)
    if args.out:
        write_json(args.out, data)
    _emit(args, matrix_dump(code), data)
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "bound": cmd_bound,
    "enumerate": cmd_enumerate,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
