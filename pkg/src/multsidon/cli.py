"""Command-line interface.

Every command prints a single deterministic report to stdout in one of
three formats: json (one object), csv (header plus rows) or plain text.
Rationals are serialised as exact "numerator/denominator" strings and all
decimals are truncated, never rounded, with the digit count stated.

Exit codes: 0 on success, 2 on invalid parameters or malformed input,
3 when an internal cross-check fails (which would indicate a bug).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import pair_sidon
from .components import TripleParams
from .density import approximate_density, convergence_estimate
from .oracle import (
    VerificationError,
    empirical_density,
    general_multiplicative_witness,
)
from .rational import format_rational, truncated_decimal

TABLE_TRIPLES = (
    (2, 3, 5),
    (2, 3, 7),
    (2, 5, 7),
    (2, 5, 9),
    (2, 7, 9),
    (3, 4, 5),
    (3, 4, 7),
    (3, 5, 7),
    (3, 5, 8),
    (3, 7, 8),
)

DEFAULT_DECIMAL_DIGITS = 6


def _parse_eps(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"need positive integers: {text!r}")
    return values


def _decimal_fields(value: Fraction, digits: int) -> dict:
    return {
        "decimal": truncated_decimal(value, digits),
        "decimal_digits": digits,
        "decimal_rounding": "truncated toward zero",
    }


def _emit(report: dict, rows: list[dict] | None, fmt: str, plain: str) -> None:
    """Write one report: a json object, csv rows, or the plain rendering."""
    if fmt == "json":
        payload = dict(report)
        if rows is not None:
            payload["rows"] = rows
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        out = io.StringIO()
        data = rows if rows is not None else [report]
        writer = csv.DictWriter(out, fieldnames=list(data[0].keys()))
        writer.writeheader()
        writer.writerows(data)
        sys.stdout.write(out.getvalue())
    else:
        sys.stdout.write(plain + "\n")


def _cmd_pair_density(args: argparse.Namespace) -> int:
    params = pair_sidon.reduce_pair(args.a, args.b)
    density = pair_sidon.pair_density(params)
    report = {
        "command": "pair-density",
        "a": params.a,
        "b": params.b,
        "g": params.g,
        "density": format_rational(density),
        **_decimal_fields(density, args.digits),
    }
    plain = (
        f"maximum density for a={params.a}, b={params.b} (gcd {params.g}): "
        f"{format_rational(density)} = {truncated_decimal(density, args.digits)} "
        f"(truncated to {args.digits} digits)"
    )
    _emit(report, None, args.format, plain)
    return 0


def _cmd_pair_construct(args: argparse.Namespace) -> int:
    params = pair_sidon.reduce_pair(args.a, args.b)
    extremal = pair_sidon.construct_extremal_set(params, args.n)
    verified = None
    if args.verify:
        alpha = pair_sidon.path_alpha(pair_sidon.build_path_decomposition(params, args.n))
        if extremal.cardinality != alpha:
            raise VerificationError(
                f"cardinality {extremal.cardinality} != path optimum {alpha}"
            )
        if not pair_sidon.is_pair_multiplicative(extremal.members, params.a, params.b):
            raise VerificationError("constructed set violates the defining condition")
        verified = True
    report = {
        "command": "pair-construct",
        "a": params.a,
        "b": params.b,
        "n": args.n,
        "cardinality": extremal.cardinality,
        "members": list(extremal.members),
    }
    if verified is not None:
        report["verified"] = verified
    rows = [{"member": m} for m in extremal.members]
    plain = (
        f"extremal set for a={params.a}, b={params.b}, n={args.n}: "
        f"cardinality {extremal.cardinality}"
        + (" (verified)" if verified else "")
    )
    _emit(report, rows if args.format == "csv" else None, args.format, plain)
    return 0


def _cmd_triple_density(args: argparse.Namespace) -> int:
    params = TripleParams(args.a, args.b, args.c)
    if args.mode == "converge":
        estimate = convergence_estimate(params, args.digits)
        report = {
            "command": "triple-density",
            "mode": "converge",
            "a": params.a,
            "b": params.b,
            "c": params.c,
            "digits": estimate.digits,
            "d": estimate.cutoff,
            "value": format_rational(estimate.value),
            "decimal": estimate.decimal,
            "decimal_rounding": "truncated toward zero",
        }
        plain = (
            f"converged estimate for ({params.a},{params.b},{params.c}): "
            f"{estimate.decimal} ({estimate.digits} digits, cutoff {estimate.cutoff})"
        )
        _emit(report, None, args.format, plain)
        return 0
    if args.eps is None and args.d is None:
        raise ValueError("certified mode needs --eps or --d")
    interval = approximate_density(params, eps=args.eps, cutoff=args.d)
    report = {
        "command": "triple-density",
        "mode": "certified",
        "a": params.a,
        "b": params.b,
        "c": params.c,
        "eps": format_rational(interval.epsilon),
        "d": interval.cutoff,
        "delta_complete": format_rational(interval.delta_complete),
        "delta_small": format_rational(interval.delta_small),
        "tail_bound": format_rational(interval.tail_bound),
        "lower": format_rational(interval.lower),
        "upper": format_rational(interval.upper),
        "lower_decimal": truncated_decimal(interval.lower, args.digits),
        "upper_decimal": truncated_decimal(interval.upper, args.digits),
        "decimal_digits": args.digits,
        "decimal_rounding": "truncated toward zero",
    }
    plain = (
        f"certified interval for ({params.a},{params.b},{params.c}) at cutoff "
        f"{interval.cutoff}:\n"
        f"  lower {format_rational(interval.lower)}"
        f" = {truncated_decimal(interval.lower, args.digits)}\n"
        f"  upper {format_rational(interval.upper)}"
        f" = {truncated_decimal(interval.upper, args.digits)}\n"
        f"  width <= {truncated_decimal(interval.tail_bound, args.digits)}"
        f" ({args.digits} digits, truncated)"
    )
    _emit(report, None, args.format, plain)
    return 0


def _cmd_triple_table(args: argparse.Namespace) -> int:
    rows = []
    for a, b, c in TABLE_TRIPLES:
        params = TripleParams(a, b, c)
        estimate = convergence_estimate(params, args.digits)
        interval = approximate_density(params, eps=args.eps)
        rows.append(
            {
                "a": a,
                "b": b,
                "c": c,
                "estimate": estimate.decimal,
                "estimate_d": estimate.cutoff,
                "lower": format_rational(interval.lower),
                "upper": format_rational(interval.upper),
                "lower_decimal": truncated_decimal(interval.lower, args.digits + 2),
                "upper_decimal": truncated_decimal(interval.upper, args.digits + 2),
                "certified_d": interval.cutoff,
            }
        )
    report = {
        "command": "triple-table",
        "digits": args.digits,
        "eps": format_rational(Fraction(args.eps)),
        "decimal_rounding": "truncated toward zero",
    }
    plain_lines = [f"{'a':>2} {'b':>2} {'c':>2} {'estimate':>10} {'interval':>25}"]
    plain_lines.extend(
        f"{r['a']:>2} {r['b']:>2} {r['c']:>2} {r['estimate']:>10} "
        f"[{r['lower_decimal']}, {r['upper_decimal']}]"
        for r in rows
    )
    _emit(report, rows, args.format, "\n".join(plain_lines))
    return 0


def _cmd_empirical(args: argparse.Namespace) -> int:
    params = TripleParams(args.a, args.b, args.c)
    ratio = empirical_density(params, args.n, verify_upto=args.verify_upto)
    alpha = ratio.numerator * args.n // ratio.denominator
    report = {
        "command": "empirical",
        "a": params.a,
        "b": params.b,
        "c": params.c,
        "n": args.n,
        "alpha": alpha,
        "ratio": format_rational(ratio),
        **_decimal_fields(ratio, args.digits),
        "verified": args.n <= args.verify_upto,
    }
    plain = (
        f"alpha(G_{args.n}) / {args.n} = {format_rational(ratio)} = "
        f"{truncated_decimal(ratio, args.digits)} (truncated to {args.digits} digits)"
        + (" [components cross-checked]" if args.n <= args.verify_upto else "")
    )
    _emit(report, None, args.format, plain)
    return 0


def _read_set_file(path: str) -> set[int]:
    members = set()
    with open(path, "r", encoding="ascii") as handle:
        for lineno, line in enumerate(handle, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                value = int(text)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not an integer: {text!r}") from None
            if value < 1:
                raise ValueError(f"{path}:{lineno}: value must be positive: {value}")
            members.add(value)
    return members


def _cmd_check_set(args: argparse.Namespace) -> int:
    members = _read_set_file(args.set_file)
    witness = None
    if members:
        witness = general_multiplicative_witness(members, args.A, args.B)
    holds = witness is None
    report = {
        "command": "check-set",
        "A": list(args.A),
        "B": list(args.B),
        "size": len(members),
        "multiplicative": holds,
        "witness": None
        if holds
        else {"a": witness[0], "b": witness[1], "x": witness[2], "y": witness[3]},
    }
    row = {
        "A": ",".join(map(str, args.A)),
        "B": ",".join(map(str, args.B)),
        "size": len(members),
        "multiplicative": holds,
        "witness": "" if holds else f"{witness[0]}*{witness[2]} = {witness[1]}*{witness[3]}",
    }
    if holds:
        plain = f"set of {len(members)} elements is multiplicative for the given A, B"
    else:
        a, b, x, y = witness
        plain = f"violation: {a}*{x} = {b}*{y} = {a * x}"
    _emit(report, [row] if args.format == "csv" else None, args.format, plain)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multsidon",
        description="Extremal multiplicative-Sidon-type set densities, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("json", "csv", "plain"), default="json",
            help="output format (default json)",
        )
        p.add_argument(
            "--digits", type=int, default=DEFAULT_DECIMAL_DIGITS,
            help="fractional digits in decimal renderings",
        )

    p = sub.add_parser("pair-density", help="maximum density b/(b+gcd(a,b))")
    p.add_argument("--a", type=_positive_int, required=True)
    p.add_argument("--b", type=_positive_int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_pair_density)

    p = sub.add_parser("pair-construct", help="maximum-cardinality set in [n]")
    p.add_argument("--a", type=_positive_int, required=True)
    p.add_argument("--b", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="cross-check cardinality and the defining condition")
    add_common(p)
    p.set_defaults(func=_cmd_pair_construct)

    p = sub.add_parser("triple-density", help="certified or converged density")
    p.add_argument("--a", type=_positive_int, required=True)
    p.add_argument("--b", type=_positive_int, required=True)
    p.add_argument("--c", type=_positive_int, required=True)
    p.add_argument("--eps", type=_parse_eps, default=None,
                   help="target interval width (certified mode)")
    p.add_argument("--d", type=int, default=None, help="force the height cutoff")
    p.add_argument("--mode", choices=("certified", "converge"), default="certified")
    add_common(p)
    p.set_defaults(func=_cmd_triple_density)

    p = sub.add_parser("triple-table", help="density table for ten small triples")
    p.add_argument("--eps", type=_parse_eps, default=Fraction(1, 20000),
                   help="certified interval width per row (default 1/20000)")
    add_common(p)
    p.set_defaults(func=_cmd_triple_table, digits=4)

    p = sub.add_parser("empirical", help="alpha(G_n)/n from the explicit graph")
    p.add_argument("--a", type=_positive_int, required=True)
    p.add_argument("--b", type=_positive_int, required=True)
    p.add_argument("--c", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--verify-upto", type=int, default=0, dest="verify_upto",
                   help="cross-check every component when n is at most this")
    add_common(p)
    p.set_defaults(func=_cmd_empirical)

    p = sub.add_parser("check-set", help="test a file of integers for the condition")
    p.add_argument("--A", type=_int_list, required=True, help="comma-separated")
    p.add_argument("--B", type=_int_list, required=True, help="comma-separated")
    p.add_argument("--set-file", required=True, dest="set_file")
    add_common(p)
    p.set_defaults(func=_cmd_check_set)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
