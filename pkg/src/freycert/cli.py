"""Command-line surface: one subcommand per operation, text or JSON output.

Exit codes: 0 success, 1 usage or validation error, 2 computational failure
(unclassifiable instance, factoring budget exceeded, failed verification,
FATAL search witnesses).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .arith import is_prime
from .certify import HYP_COPRIME, HYP_POSITIVE, HYP_X_ODD, FamilySpec, certify
from .corpus import random_instances
from .dimensions import genus_X0, verify_no_newform_levels
from .docformat import SCHEMA_VERSION, stringify
from .errors import (
    BadReductionError,
    FactorBudgetError,
    IntegralityError,
    NonMinimalModelError,
    NotPrimeError,
    SingularModelError,
    UnclassifiableError,
    ValidationError,
    VerificationError,
)
from .frey import TernaryInstance, analyze, build_frey, classify, normalize, validate
from .search import SearchConfig, search_family, search_lebesgue
from .weierstrass import compute_invariants

_USAGE_EXIT = 1
_FAILURE_EXIT = 2

_COMPUTATIONAL_ERRORS = (
    UnclassifiableError,
    FactorBudgetError,
    VerificationError,
    SingularModelError,
    NonMinimalModelError,
    BadReductionError,
    IntegralityError,
    NotPrimeError,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's default 2
        raise _UsageError(message)


def _int_or_any(value: str):
    if value == "any":
        return "any"
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'any', got {value!r}")


def _int_list(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in value.split(",") if v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")


def _render_text(value, indent: int = 0, key: str | None = None) -> list[str]:
    pad = "  " * indent
    label = f"{pad}{key}: " if key is not None else pad
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"] if key is not None else []
        for k, v in value.items():
            lines.extend(_render_text(v, indent + (key is not None), k))
        return lines
    if isinstance(value, list):
        if not value:
            return [f"{label}[]"]
        if all(not isinstance(v, (dict, list)) for v in value):
            return [label + ", ".join(str(v) for v in value)]
        lines = [f"{pad}{key}:"] if key is not None else []
        for i, v in enumerate(value):
            lines.extend(_render_text(v, indent + 1, f"[{i}]"))
        return lines
    return [f"{label}{value}"]


def _emit(command: str, payload: dict, args, diagnostics: list[str] | None = None) -> None:
    envelope = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "input": payload.pop("_input", {}),
        "result": payload,
        "diagnostics": diagnostics or [],
    }
    if args.format == "json":
        print(json.dumps(stringify(envelope), ensure_ascii=False, indent=2))
    else:
        for line in _render_text(stringify(envelope)):
            print(line)


def _instance_from(args) -> TernaryInstance:
    return TernaryInstance(args.A, args.B, args.C, args.a, args.b, args.c, args.n)


def _instance_echo(inst: TernaryInstance) -> dict:
    return {
        "A": inst.A, "B": inst.B, "C": inst.C,
        "a": inst.a, "b": inst.b, "c": inst.c, "n": inst.n,
    }


def _curve_echo(curve) -> dict:
    return {"a1": curve.a1, "a2": curve.a2, "a3": curve.a3, "a4": curve.a4, "a6": curve.a6}


def _require_valid(inst: TernaryInstance) -> None:
    violations = validate(inst)
    if violations:
        raise ValidationError(violations)


def _cmd_invariants(args) -> int:
    from .weierstrass import WeierstrassCurve

    curve = WeierstrassCurve(args.a1, args.a2, args.a3, args.a4, args.a6)
    inv = compute_invariants(curve)
    diagnostics = []
    payload = {
        "_input": _curve_echo(curve),
        "b2": inv.b2, "b4": inv.b4, "b6": inv.b6, "b8": inv.b8,
        "c4": inv.c4, "c6": inv.c6, "disc": inv.disc,
    }
    if inv.disc == 0:
        payload["j"] = "singular"
        diagnostics.append("discriminant is zero: singular model, no j-invariant")
    else:
        payload["j_num"] = inv.j_num
        payload["j_den"] = inv.j_den
    _emit("invariants", payload, args, diagnostics)
    return 0


def _cmd_classify(args) -> int:
    inst = _instance_from(args)
    _require_valid(inst)
    normalized, moves = normalize(inst)
    case = classify(normalized)
    _emit(
        "classify",
        {
            "_input": _instance_echo(inst),
            "case": case.value,
            "moves": moves or ["identity"],
            "normalized": _instance_echo(normalized),
        },
        args,
    )
    return 0


def _cmd_frey(args) -> int:
    inst = _instance_from(args)
    _require_valid(inst)
    normalized, _ = normalize(inst)
    case = classify(normalized)
    curve = build_frey(normalized, case)
    _emit(
        "frey",
        {"_input": _instance_echo(inst), "case": case.value, "curve": _curve_echo(curve)},
        args,
    )
    return 0


def _cmd_analyze(args) -> int:
    inst = _instance_from(args)
    _require_valid(inst)
    _, moves = normalize(inst)
    result = analyze(inst)
    diagnostics = []
    if not result.level_lowering_applicable:
        diagnostics.append("|a*b| = 1: level-lowering inapplicable (possible CM)")
    _emit(
        "analyze",
        {
            "_input": _instance_echo(inst),
            "case": result.case.value,
            "curve_index": result.curve_index,
            "curve": _curve_echo(result.curve),
            "normalized": _instance_echo(result.instance),
            "moves": moves or ["identity"],
            "delta_exp": result.delta_exp,
            "disc_closed_form": result.disc_closed_form,
            "conductor": result.conductor,
            "conductor_2_exponent": result.conductor_2_exponent,
            "level": result.level,
            "level_2_exponent": result.level_2_exponent,
            "level_lowering_applicable": result.level_lowering_applicable,
        },
        args,
        diagnostics,
    )
    return 0


def _record_echo(rec) -> dict:
    return {
        "level": rec.level, "mu": rec.mu, "nu2": rec.nu2, "nu3": rec.nu3,
        "nu_inf": rec.nu_inf, "genus": rec.genus,
        "dim_s2": rec.dim_s2, "dim_s2_new": rec.dim_s2_new,
    }


def _cmd_dims(args) -> int:
    diagnostics = []
    if args.upto is not None:
        if args.upto < 1:
            raise ValidationError(["--upto must be >= 1"])
        records = [genus_X0(n) for n in range(1, args.upto + 1)]
        payload = {
            "_input": {"upto": args.upto},
            "records": [_record_echo(r) for r in records],
        }
        if args.report_dir:
            from .reporting import render_dimension_scan

            paths = render_dimension_scan(records, Path(args.report_dir))
            payload["report_files"] = [str(p) for p in paths]
        _emit("dims", payload, args, diagnostics)
        return 0
    if args.level is None:
        raise _UsageError("dims requires --level N or --upto M")
    if args.level < 1:
        raise ValidationError(["--level must be >= 1"])
    rec = genus_X0(args.level)
    _emit("dims", {"_input": {"level": args.level}, **_record_echo(rec)}, args)
    return 0


def _cmd_verify_levels(args) -> int:
    records = verify_no_newform_levels()
    payload = {
        "_input": {},
        "levels": [_record_echo(r) for r in records],
        "all_zero": True,
    }
    if args.report_dir:
        from .reporting import render_level_report

        paths = render_level_report(records, Path(args.report_dir))
        payload["report_files"] = [str(p) for p in paths]
    _emit("verify-levels", payload, args)
    return 0


def _cmd_certify(args) -> int:
    family = FamilySpec(
        sign="+" if args.sign == "plus" else "-",
        q=args.q,
        alpha=args.alpha,
        p=args.p,
        n=args.n,
    )
    violations = family.violations()
    if violations:
        raise ValidationError(violations)
    dropped = set(args.drop_hypothesis or [])
    hypothesis_by_flag = {"x-odd": HYP_X_ODD, "coprime": HYP_COPRIME, "positive": HYP_POSITIVE}
    hypotheses = tuple(
        h for flag, h in hypothesis_by_flag.items()
        if flag not in dropped
    )
    certificate = certify(family, hypotheses or ())
    doc = certificate.to_document()
    doc["_input"] = {"sign": args.sign, "q": args.q, "alpha": args.alpha,
                     "p": args.p, "n": args.n}
    _emit("certify", doc, args)
    return 0


def _cmd_search(args) -> int:
    if args.p is not None:
        p_set = args.p
    else:
        p_set = tuple(
            p for p in range(3, args.p_max + 1)
            if is_prime(p) and p not in (2, args.q)
        )
    config = SearchConfig(
        sign="+" if args.sign == "plus" else "-",
        q=args.q,
        alpha_min=args.alpha_min,
        alpha_max=args.alpha_max,
        p_set=p_set,
        n_set=args.n_set,
        y_max=args.y_max,
        require_x_odd=not args.allow_even_x,
        require_coprime=not args.allow_common_factor,
        time_budget=args.time_budget,
    )
    report = search_family(config, threads=args.threads)
    doc = report.to_document()
    doc["_input"] = config.echo()
    diagnostics = []
    if not report.complete:
        diagnostics.append(
            f"time budget hit: only y <= {report.covered_y_max} covered"
        )
    if args.report_dir:
        from .reporting import render_search_report

        paths = render_search_report(report, Path(args.report_dir))
        doc["report_files"] = [str(p) for p in paths]
    fatal = report.fatal_witnesses()
    for w in fatal:
        diagnostics.append(f"FATAL witness: x={w.x} y={w.y} alpha={w.alpha} p={w.p} n={w.n}")
    _emit("search", doc, args, diagnostics)
    return _FAILURE_EXIT if fatal else 0


def _cmd_lebesgue(args) -> int:
    solutions = search_lebesgue(args.B, args.n_min, args.n_max, args.y_max)
    _emit(
        "lebesgue",
        {
            "_input": {"B": args.B, "n_min": args.n_min, "n_max": args.n_max,
                       "y_max": args.y_max},
            "solutions": [{"x": x, "y": y, "n": n} for x, y, n in solutions],
            "count": len(solutions),
        },
        args,
    )
    return 0


def _cmd_corpus(args) -> int:
    instances = random_instances(count=args.count, seed=args.seed)
    _emit(
        "corpus",
        {
            "_input": {"count": args.count, "seed": args.seed},
            "instances": [_instance_echo(i) for i in instances],
        },
        args,
    )
    return 0


def _add_instance_arguments(parser) -> None:
    for name in ("A", "B", "C", "a", "b", "c", "n"):
        parser.add_argument(name, type=int)


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized corpus generation")
    common.add_argument("--threads", type=int, default=1,
                        help="parallelism degree for search")

    parser = _Parser(prog="freycert", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common],
                       help="b/c-invariants, discriminant and j of a model")
    for name in ("a1", "a2", "a3", "a4", "a6"):
        p.add_argument(name, type=int)
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("classify", parents=[common],
                       help="normalize an instance and name its case")
    _add_instance_arguments(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("frey", parents=[common], help="attached curve of an instance")
    _add_instance_arguments(p)
    p.set_defaults(handler=_cmd_frey)

    p = sub.add_parser("analyze", parents=[common],
                       help="discriminant, conductor and predicted level")
    _add_instance_arguments(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("dims", parents=[common],
                       help="genus and cusp form dimensions of X0(N)")
    p.add_argument("--level", type=int)
    p.add_argument("--upto", type=int)
    p.add_argument("--report-dir")
    p.set_defaults(handler=_cmd_dims)

    p = sub.add_parser("verify-levels", parents=[common],
                       help="check the newform-free level list")
    p.add_argument("--report-dir")
    p.set_defaults(handler=_cmd_verify_levels)

    p = sub.add_parser("certify", parents=[common],
                       help="emit a non-existence certificate for a family")
    p.add_argument("--sign", choices=("plus", "minus"), required=True)
    p.add_argument("--q", type=int, default=5)
    p.add_argument("--alpha", type=_int_or_any, default="any")
    p.add_argument("--p", type=_int_or_any, default="any")
    p.add_argument("--n", type=_int_or_any, default="any")
    p.add_argument("--drop-hypothesis", action="append",
                   choices=("x-odd", "coprime", "positive"),
                   help="omit a hypothesis (the certificate degrades honestly)")
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("search", parents=[common],
                       help="exhaustive family search over a lattice box")
    p.add_argument("--sign", choices=("plus", "minus"), required=True)
    p.add_argument("--q", type=int, default=5)
    p.add_argument("--alpha-min", type=int, default=1)
    p.add_argument("--alpha-max", type=int, default=4)
    p.add_argument("--p", type=_int_list, default=None,
                   help="explicit comma-separated prime list")
    p.add_argument("--p-max", type=int, default=47,
                   help="use all primes up to this bound except 2 and q")
    p.add_argument("--n-set", type=_int_list, default=(7, 11, 13))
    p.add_argument("--y-max", type=int, default=2000)
    p.add_argument("--allow-even-x", action="store_true",
                   help="drop the 'x odd' filter")
    p.add_argument("--allow-common-factor", action="store_true",
                   help="drop the gcd(x,y)=1 filter")
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--report-dir")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("lebesgue", parents=[common],
                       help="solve x^2 + B = y^n inside a box")
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--y-max", type=int, default=10)
    p.set_defaults(handler=_cmd_lebesgue)

    p = sub.add_parser("corpus", parents=[common],
                       help="emit seeded random valid instances")
    p.add_argument("--count", type=int, default=25)
    p.set_defaults(handler=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return _USAGE_EXIT
    try:
        return args.handler(args)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return _USAGE_EXIT
    except ValidationError as err:
        for violation in err.violations:
            print(f"invalid input: {violation}", file=sys.stderr)
        return _USAGE_EXIT
    except _COMPUTATIONAL_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return _FAILURE_EXIT


if __name__ == "__main__":
    sys.exit(main())
