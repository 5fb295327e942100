"""Command-line front end.

Every subcommand is a thin wrapper over one library operation and produces
deterministic output: the same invocation (including seed) writes byte-iden-
tical files.  Output formats are csv (default), json, and plain; plain is for
reading, not parsing.

Exit codes: 0 success, 1 word-is-not-a-superpattern (check), 2 parse/usage
error, 3 enumeration budget exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import oeis
from .classify import (
    COUNT_REPORT_HEADER,
    QUATERNARY_EXAMPLE,
    BudgetExceededError,
    SuperpatternNotFoundError,
    classify,
    count_formulas,
    ends_with_minimum_superpattern,
    has_flanking_pairs,
    is_superpattern,
    isomorphism_orbit,
    iter_minimal_upto_iso,
    iter_strict_minimal_upto_iso,
    iter_strict_superpatterns,
    iter_superpatterns,
    missing_patterns,
    verify_quaternary_counterexample,
)
from .patterns import Pattern, Word, contains_pattern
from .series import moments_from_gf
from .waiting import (
    brute_force_pmf,
    coupon_expectations,
    pmf_table,
    simulate_tau,
    waiting_time_gf,
)

BUDGET_ENV_VAR = "SUPERPATTERN_BUDGET"

EXIT_OK = 0
EXIT_NOT_SUPERPATTERN = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VERIFY_FAILED = 4


def format_decimal(value: Fraction, digits: int = 12) -> str:
    """Exact decimal rendering of a rational, rounded to `digits` significant
    digits; display only, never fed back into computation."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(header: str, rows: list[str], trailer: Optional[str] = None) -> str:
    lines = [header, *rows]
    if trailer is not None:
        lines.append(trailer)
    return "\n".join(lines) + "\n"


def _budget(args: argparse.Namespace) -> Optional[int]:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV_VAR)
    return int(env) if env else None


def _add_common(sub: argparse.ArgumentParser, *, budget: bool = False) -> None:
    sub.add_argument("--format", choices=("csv", "json", "plain"), default="csv")
    sub.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
    if budget:
        sub.add_argument(
            "--budget",
            type=int,
            help=f"word-space cap for exhaustive scans (default per alphabet;"
            f" ${BUDGET_ENV_VAR} overrides)",
        )


# --- check --------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    word = Word.parse(args.word, alphabet_size=args.d)
    flags = classify(word, args.k)
    missing = [str(p) for p in missing_patterns(word, args.k)]
    if args.format == "json":
        text = json.dumps(
            {
                "word": str(word),
                "k": args.k,
                "d": word.alphabet_size,
                "is_superpattern": flags.is_superpattern,
                "is_minimal": flags.is_minimal,
                "is_strict": flags.is_strict,
                "is_minimum": flags.is_minimum,
                "missing_patterns": missing,
            },
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        text = _csv(
            "word,k,d,is_superpattern,is_minimal,is_strict,is_minimum,missing_patterns",
            [
                f"{word},{args.k},{word.alphabet_size},{flags.is_superpattern},"
                f"{flags.is_minimal},{flags.is_strict},{flags.is_minimum},"
                f"{';'.join(missing)}"
            ],
        )
    else:
        lines = [
            f"word {word} (alphabet 1..{word.alphabet_size}, k={args.k})",
            f"  superpattern: {flags.is_superpattern}",
            f"  minimal:      {flags.is_minimal}",
            f"  strict:       {flags.is_strict}",
            f"  minimum:      {flags.is_minimum}",
        ]
        if missing:
            lines.append(f"  missing patterns: {' '.join(missing)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if flags.is_superpattern else EXIT_NOT_SUPERPATTERN


# --- enumerate ------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    budget = _budget(args)
    n = args.n
    if args.filter == "strict-minimal":
        words = list(iter_strict_minimal_upto_iso(n, budget))
    elif args.filter == "minimal":
        words = list(iter_minimal_upto_iso(n, budget))
    else:
        words = list(
            iter_superpatterns(args.d, args.k, n, canonical=args.scope == "upto-iso", budget=budget)
        )
    if args.scope == "full" and args.filter in ("minimal", "strict-minimal"):
        words = isomorphism_orbit(words)
    lines = [str(w) for w in words]
    if args.format == "json":
        text = json.dumps({"words": lines, "count": len(words)}, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv("word", lines, trailer=f"# count: {len(words)}")
    else:
        text = "\n".join([*lines, f"count: {len(words)}"]) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# --- counts ---------------------------------------------------------------------


def cmd_counts(args: argparse.Namespace) -> int:
    if args.n_from > args.n_to:
        raise ValueError("--n-from must not exceed --n-to")
    reports = [count_formulas(n) for n in range(args.n_from, args.n_to + 1)]
    if args.format == "json":
        text = json.dumps(
            [
                {
                    "n": r.n,
                    "gamma_total": r.gamma_total,
                    "s_mu": r.s_mu,
                    "s_a": r.s_a,
                    "s_total": r.s_total,
                    "beta_a": r.beta_a,
                    "beta_b": r.beta_b,
                    "beta_total": r.beta_total,
                }
                for r in reports
            ],
            indent=2,
        ) + "\n"
    else:
        text = _csv(COUNT_REPORT_HEADER, [r.csv_row() for r in reports])
    _emit(text, args.out)
    return EXIT_OK


# --- pmf ------------------------------------------------------------------------


def cmd_pmf(args: argparse.Namespace) -> int:
    digits = args.digits
    budget = _budget(args)
    table = pmf_table(args.d, args.n)
    rows = []
    json_rows = []
    brute_cum = Fraction(0)
    for n in range(1, args.n + 1):
        exact = table.entries[n]
        cum = table.cumulative[n]
        if args.mode == "exact":
            rows.append(f"{n},{exact},{format_decimal(exact, digits)},{cum}")
            json_rows.append({"n": n, "probability": str(exact), "cumulative": str(cum)})
        else:
            brute = brute_force_pmf(args.d, args.d, n, budget)
            brute_cum += brute
            if args.mode == "brute":
                rows.append(f"{n},{brute},{format_decimal(brute, digits)},{brute_cum}")
                json_rows.append({"n": n, "probability": str(brute), "cumulative": str(brute_cum)})
            else:
                rows.append(
                    f"{n},{exact},{format_decimal(exact, digits)},{cum},{brute},{exact == brute}"
                )
                json_rows.append(
                    {
                        "n": n,
                        "probability": str(exact),
                        "cumulative": str(cum),
                        "brute_force": str(brute),
                        "match": exact == brute,
                    }
                )
    tail = table.tail if args.mode != "brute" else 1 - brute_cum
    if args.format == "json":
        text = json.dumps(
            {"d": args.d, "k": args.d, "n_max": args.n, "rows": json_rows, "tail": str(tail)},
            indent=2,
        ) + "\n"
    else:
        header = "n,probability_exact,probability_decimal,cumulative_exact"
        if args.mode == "both":
            header += ",brute_exact,match"
            tail_row = f"tail,{tail},{format_decimal(tail, digits)},1,,"
        else:
            tail_row = f"tail,{tail},{format_decimal(tail, digits)},1"
        text = _csv(header, rows, trailer=tail_row)
    _emit(text, args.out)
    return EXIT_OK


# --- moments --------------------------------------------------------------------


def cmd_moments(args: argparse.Namespace) -> int:
    mean, variance = moments_from_gf(waiting_time_gf(args.d))
    digits = args.digits
    if args.format == "json":
        text = json.dumps(
            {
                "d": args.d,
                "k": args.d,
                "mean": str(mean),
                "mean_decimal": format_decimal(mean, digits),
                "variance": str(variance),
                "variance_decimal": format_decimal(variance, digits),
            },
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        text = _csv(
            "quantity,exact,decimal",
            [
                f"mean,{mean},{format_decimal(mean, digits)}",
                f"variance,{variance},{format_decimal(variance, digits)}",
            ],
        )
    else:
        text = (
            f"mean     = {mean} = {format_decimal(mean, digits)}\n"
            f"variance = {variance} = {format_decimal(variance, digits)}\n"
        )
    _emit(text, args.out)
    return EXIT_OK


# --- gf -------------------------------------------------------------------------


def cmd_gf(args: argparse.Namespace) -> int:
    coeffs = waiting_time_gf(args.d).series_coefficients(args.n)
    if args.format == "json":
        text = json.dumps(
            {"d": args.d, "coefficients": {n: str(c) for n, c in enumerate(coeffs)}}, indent=2
        ) + "\n"
    else:
        text = _csv("n,coefficient", [f"{n},{c}" for n, c in enumerate(coeffs)])
    _emit(text, args.out)
    return EXIT_OK


# --- simulate -------------------------------------------------------------------


def cmd_simulate(args: argparse.Namespace) -> int:
    summary = simulate_tau(args.d, args.k, args.trials, args.seed)
    if args.format == "json":
        text = json.dumps(
            {
                "d": summary.d,
                "k": summary.k,
                "trials": summary.trials,
                "seed": summary.seed,
                "mean": summary.sample_mean,
                "variance": summary.sample_variance,
                "histogram": {str(n): c for n, c in summary.histogram.items()},
            },
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        text = _csv("n,count", [f"{n},{c}" for n, c in summary.histogram.items()])
    else:
        lines = [
            f"d={summary.d} k={summary.k} trials={summary.trials} seed={summary.seed}",
            f"sample mean     = {summary.sample_mean}",
            f"sample variance = {summary.sample_variance}",
            "histogram:",
        ]
        lines += [f"  {n}: {c}" for n, c in summary.histogram.items()]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# --- verify ---------------------------------------------------------------------


def _structure_checks(n_max: int, budget: Optional[int]) -> list[tuple[str, bool]]:
    checks = []
    for n in range(7, n_max + 1):
        ok = all(has_flanking_pairs(w) for w in iter_strict_superpatterns(3, 3, n, budget))
        checks.append((f"flanking-pairs-on-strict n={n}", ok))
    for n in range(8, n_max + 1):
        ok = all(ends_with_minimum_superpattern(w) for w in iter_strict_minimal_upto_iso(n, budget))
        checks.append((f"terminal-minimum-on-strict-minimal n={n}", ok))
    return checks


def _oeis_checks() -> list[tuple[str, bool]]:
    return [
        (f"{c.label} n={c.n} ({c.computed} vs {c.reference})", c.ok)
        for c in oeis.check_reference_sequences(7, 15)
    ]


def _counterexample_checks() -> list[tuple[str, bool]]:
    w = QUATERNARY_EXAMPLE
    return [
        ("quaternary-example contains 1234", contains_pattern(w, Pattern.parse("1234"))),
        ("quaternary-example prefix not a superpattern", not is_superpattern(w.prefix(14), 4)),
        ("quaternary strict superpattern without embedded minimum", verify_quaternary_counterexample()),
    ]


def cmd_verify(args: argparse.Namespace) -> int:
    budget = _budget(args)
    checks: list[tuple[str, bool]] = []
    if args.suite in ("structure", "all"):
        checks += _structure_checks(args.n, budget)
    if args.suite in ("oeis", "all"):
        checks += _oeis_checks()
    if args.suite in ("counterexample", "all"):
        checks += _counterexample_checks()
    if args.format == "json":
        text = json.dumps([{"check": name, "ok": ok} for name, ok in checks], indent=2) + "\n"
    elif args.format == "csv":
        text = _csv("check,ok", [f"{name},{ok}" for name, ok in checks])
    else:
        text = "".join(f"{'ok  ' if ok else 'FAIL'} {name}\n" for name, ok in checks)
    _emit(text, args.out)
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_VERIFY_FAILED


# --- coupons --------------------------------------------------------------------


def cmd_coupons(args: argparse.Namespace) -> int:
    single, all_words = coupon_expectations(args.d, args.k)
    digits = args.digits
    if args.format == "json":
        text = json.dumps(
            {
                "d": args.d,
                "k": args.k,
                "single_collection": str(single),
                "all_words": str(all_words),
            },
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        text = _csv(
            "quantity,exact,decimal",
            [
                f"single_collection,{single},{format_decimal(single, digits)}",
                f"all_words,{all_words},{format_decimal(all_words, digits)}",
            ],
        )
    else:
        text = (
            f"single coupon collection: {single} = {format_decimal(single, digits)}\n"
            f"all length-{args.k} words:  {all_words} = {format_decimal(all_words, digits)}\n"
        )
    _emit(text, args.out)
    return EXIT_OK


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superpatterns",
        description="Superpattern classification, enumeration, and waiting-time distributions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="classify a word and list its missing patterns")
    p.add_argument("word", help="word in digit-string form (comma-separated beyond 9 letters)")
    p.add_argument("--k", type=int, default=3, help="pattern length (default 3)")
    p.add_argument("--d", type=int, help="alphabet size (default: largest letter)")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("enumerate", help="list superpatterns of one length")
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--filter", choices=("all", "minimal", "strict-minimal"), default="strict-minimal")
    p.add_argument("--scope", choices=("upto-iso", "full"), default="upto-iso")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    _add_common(p, budget=True)
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("counts", help="closed-form superpattern counts per length")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_counts)

    p = subs.add_parser("pmf", help="waiting-time probability mass function")
    p.add_argument("--d", type=int, choices=(2, 3), default=3)
    p.add_argument("--n", type=int, required=True, help="truncate the table at this length")
    p.add_argument("--mode", choices=("exact", "brute", "both"), default="exact")
    p.add_argument("--digits", type=int, default=12)
    _add_common(p, budget=True)
    p.set_defaults(func=cmd_pmf)

    p = subs.add_parser("moments", help="exact mean and variance of the waiting time")
    p.add_argument("--d", type=int, choices=(2, 3), default=3)
    p.add_argument("--digits", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=cmd_moments)

    p = subs.add_parser("gf", help="series coefficients of the waiting-time generating function")
    p.add_argument("--d", type=int, choices=(2, 3), default=3)
    p.add_argument("--n", type=int, required=True, help="highest coefficient order")
    _add_common(p)
    p.set_defaults(func=cmd_gf)

    p = subs.add_parser("simulate", help="seeded Monte Carlo estimate of the waiting time")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("verify", help="run the built-in verification suites")
    p.add_argument("--suite", choices=("structure", "oeis", "counterexample", "all"), default="all")
    p.add_argument("--n", type=int, default=10, help="length ceiling for the structure suite")
    _add_common(p, budget=True)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("coupons", help="coupon-collector expectation baselines")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--digits", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=cmd_coupons)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, SuperpatternNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
