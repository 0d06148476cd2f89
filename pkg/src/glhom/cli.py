"""Command-line front end.

Subcommands: table, poly, leading, bound, verify, variety.  Results go to
standard output (text, or one JSON document with --json); diagnostics go
to standard error.  Exit codes: 0 success/PASS, 1 input or validation
error, 2 verification failure or unstable-regime refusal, 3 resource
limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .counting import (
    DEFAULT_MAX_TUPLES,
    hom_count_poly,
    leading_term,
    variety_report,
)
from .errors import GlhomError, ResourceLimit, UnstableRegime, ValidationError
from .minimize import minimal_tuples, stability_bound
from .oracle import DEFAULT_MAX_CANDIDATES, builtin_presentation, hom_count_bruteforce
from .profiles import parse_group_spec, profile_of, splitting_field_check


class _UsageError(GlhomError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems through our exit-code contract."""

    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="glhom", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--group", required=True, help="group spec, e.g. sym:4 or cyclic:6")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument(
        "--max-tuples",
        type=int,
        default=DEFAULT_MAX_TUPLES,
        help="cap on enumerated eligible tuples",
    )
    common.add_argument(
        "--max-gl",
        type=int,
        default=DEFAULT_MAX_CANDIDATES,
        help="cap on brute-force candidate matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="per-residue minimal-tuple table")

    p = sub.add_parser("poly", parents=[common], help="full count polynomial f_n")
    p.add_argument("-n", type=int, required=True, dest="n")
    p.add_argument("--eval", dest="eval_points", default=None, help="comma-separated integers")

    p = sub.add_parser("leading", parents=[common], help="leading term of f_n")
    p.add_argument("-n", type=int, required=True, dest="n")

    sub.add_parser("bound", parents=[common], help="stability bound N = b*a")

    p = sub.add_parser("verify", parents=[common], help="polynomial vs brute force")
    p.add_argument("-n", type=int, required=True, dest="n")
    p.add_argument("-q", type=int, required=True, dest="q")

    p = sub.add_parser("variety", parents=[common], help="representation variety dimension")
    p.add_argument("-n", type=int, required=True, dest="n")
    return parser


def _fraction_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _tuple_str(t: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_table(profile, args) -> int:
    a = profile.order
    reports = [minimal_tuples(profile, r) for r in range(a)]
    bound = stability_bound(profile)
    rows = [
        {
            "r": rep.r,
            "m": rep.m_r,
            "sample": list(rep.tuples[0]),
            "s": rep.s_r,
            "eps": _fraction_str(rep.eps_r),
        }
        for rep in reports
    ]
    payload = {
        "command": "table",
        "group": str(profile),
        "order": a,
        "degrees": list(profile.degrees),
        "rows": rows,
        "b": bound.b,
        "n_threshold": bound.n_threshold,
        "threshold_ceiling": a * (a - 1),
    }
    sample_w = max(
        len("sample tuple"), max(len(_tuple_str(rep.tuples[0])) for rep in reports)
    )
    lines = [f"{'r':>4}  {'m_r':>6}  {'sample tuple':<{sample_w}}  {'S_r':>6}  eps_r"]
    for rep in reports:
        lines.append(
            f"{rep.r:>4}  {rep.m_r:>6}  {_tuple_str(rep.tuples[0]):<{sample_w}}"
            f"  {rep.s_r:>6}  {_fraction_str(rep.eps_r)}"
        )
    lines.append(f"b = {bound.b}")
    lines.append(f"N = {bound.n_threshold} (<= a(a-1) = {a * (a - 1)})")
    _emit(payload, args.json, lines)
    return 0


def _parse_eval_points(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise _UsageError(f"--eval expects comma-separated integers, got {text!r}")


def _cmd_poly(profile, spec, args) -> int:
    poly = hom_count_poly(profile, args.n, max_tuples=args.max_tuples)
    evaluations = []
    for x in _parse_eval_points(args.eval_points):
        try:
            ok, reason = splitting_field_check(spec, x)
        except ValidationError as exc:
            ok, reason = False, str(exc)
        evaluations.append(
            {"q": x, "value": str(poly.evaluate(x)), "splitting_field": ok, "reason": reason}
        )
    payload = {
        "command": "poly",
        "group": str(profile),
        "n": args.n,
        "degree": int(poly.degree) if not poly.is_zero else None,
        "polynomial": poly.to_json_obj(),
        "evaluations": evaluations,
    }
    lines = [poly.to_text()]
    for ev in evaluations:
        line = f"f({ev['q']}) = {ev['value']}"
        if ev["splitting_field"]:
            line += f" = |Hom(A, GL_{args.n}({ev['q']}))|"
        lines.append(line)
    _emit(payload, args.json, lines)
    return 0


def _cmd_leading(profile, args) -> int:
    lt = leading_term(profile, args.n)
    bound = stability_bound(profile)
    payload = {
        "command": "leading",
        "group": str(profile),
        "n": lt.n,
        "r": lt.r,
        "coefficient": lt.coefficient,
        "exponent": lt.exponent,
        "stable": lt.stable,
        "n_threshold": bound.n_threshold,
    }
    if lt.stable:
        text = f"{lt.coefficient} * q^{lt.exponent} (stable)"
    else:
        text = (
            f"{lt.coefficient} * q^{lt.exponent}"
            f" (unstable: n={lt.n} < N={bound.n_threshold})"
        )
        print(
            f"warning: n={lt.n} is below the stability threshold N={bound.n_threshold};"
            " the reported term is the formula value and is not certified to match"
            " the true degree",
            file=sys.stderr,
        )
    _emit(payload, args.json, [text])
    return 0


def _cmd_bound(profile, args) -> int:
    a = profile.order
    bound = stability_bound(profile)
    payload = {
        "command": "bound",
        "group": str(profile),
        "order": a,
        "b": bound.b,
        "n_threshold": bound.n_threshold,
        "threshold_ceiling": a * (a - 1),
    }
    text = f"b={bound.b}, N={bound.n_threshold} (<= a(a-1)={a * (a - 1)})"
    _emit(payload, args.json, [text])
    return 0


def _cmd_variety(profile, args) -> int:
    report = variety_report(profile, args.n)
    bound = stability_bound(profile)
    payload = {
        "command": "variety",
        "group": str(profile),
        "n": args.n,
        "dimension": report.dimension,
        "components": report.top_components,
        "n_threshold": bound.n_threshold,
    }
    text = f"dimension {report.dimension}, {report.top_components} components"
    _emit(payload, args.json, [text])
    return 0


def _cmd_verify(profile, spec, args) -> int:
    presentation = builtin_presentation(spec)
    if presentation is None:
        print(f"error: no built-in presentation paired with {spec}", file=sys.stderr)
        return 1
    try:
        ok, reason = splitting_field_check(spec, args.q)
    except ValidationError as exc:
        ok, reason = False, str(exc)
    if not ok:
        print(
            f"error: F_{args.q} is not a splitting field for {spec}: {reason}",
            file=sys.stderr,
        )
        return 1
    poly = hom_count_poly(profile, args.n, max_tuples=args.max_tuples)
    value = poly.evaluate(args.q)
    brute = hom_count_bruteforce(presentation, args.n, args.q, max_candidates=args.max_gl)
    match = value == brute
    payload = {
        "command": "verify",
        "group": str(profile),
        "n": args.n,
        "q": args.q,
        "poly_value": str(value),
        "bruteforce": str(brute),
        "match": match,
    }
    lines = [
        f"f({args.q}) = {value}",
        f"brute force = {brute}",
        "PASS" if match else "FAIL",
    ]
    _emit(payload, args.json, lines)
    return 0 if match else 2


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        spec = parse_group_spec(args.group)
        profile = profile_of(spec)
        if args.command == "table":
            return _cmd_table(profile, args)
        if args.command == "poly":
            return _cmd_poly(profile, spec, args)
        if args.command == "leading":
            return _cmd_leading(profile, args)
        if args.command == "bound":
            return _cmd_bound(profile, args)
        if args.command == "variety":
            return _cmd_variety(profile, args)
        return _cmd_verify(profile, spec, args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UnstableRegime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GlhomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
