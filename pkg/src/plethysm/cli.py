"""Command line interface: expansions, cross-method verification, positivity, benchmarks.

Exit codes: 0 success / all checks pass, 1 verification or positivity
failure, 2 usage error, 3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    clear_schur_poly_cache,
    foulkes_difference,
    plethysm_oracle,
)
from .recurrence import RecurrenceCache, dent_difference, h2_closed
from .schur import SchurSum
from .thrall import h3_thrall

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def dumps(obj) -> str:
    """Canonical JSON used for all machine-readable output."""
    return json.dumps(obj, separators=(",", ":"))


def _now_ms() -> float:
    return time.perf_counter() * 1000.0


# ---------------------------------------------------------------------------
# expand

_METHODS = {
    2: {
        "recurrence": lambda n, cache, budget: cache.h2(n),
        "closed": lambda n, cache, budget: h2_closed(n),
        "oracle": lambda n, cache, budget: plethysm_oracle(2, n, budget=budget),
    },
    3: {
        "recurrence": lambda n, cache, budget: cache.h3(n),
        "thrall": lambda n, cache, budget: h3_thrall(n),
        "oracle": lambda n, cache, budget: plethysm_oracle(3, n, budget=budget),
    },
}


def cmd_expand(args) -> int:
    table = _METHODS[args.m]
    if args.method not in table:
        valid = ", ".join(sorted(table))
        print(f"error: method {args.method!r} is not valid for m={args.m} (use one of: {valid})",
              file=sys.stderr)
        return EXIT_USAGE
    total = table[args.method](args.n, RecurrenceCache(), args.budget)
    if args.format == "json":
        print(dumps({"m": args.m, "n": args.n, "method": args.method, "terms": total.json_terms()}))
    else:
        print(str(total))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

@dataclass
class VerificationReport:
    """Outcome of the cross-method comparison sweeps."""

    n_range: tuple[int, int]
    oracle_range: tuple[int, int]
    methods_compared: list[str]
    mismatches: list[tuple] = field(default_factory=list)
    positivity_failures: list[tuple] = field(default_factory=list)
    elapsed_ms: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.positivity_failures


def _record_mismatches(label: str, n: int, values: dict[str, SchurSum], sink: list) -> None:
    support = set()
    for total in values.values():
        support |= total.support()
    for lam in sorted(support, reverse=True):
        coeffs = {name: total.coeff(lam) for name, total in values.items()}
        if len(set(coeffs.values())) > 1:
            sink.append((label, n, list(lam), coeffs))


def run_verify(max_n: int, oracle_max_n: int = 8, budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """Compare the recurrence, closed-form, and oracle expansions of h2 and h3."""
    report = VerificationReport(
        n_range=(0, max_n),
        oracle_range=(0, min(oracle_max_n, max_n)),
        methods_compared=["h3_recurrence", "h3_thrall", "h3_oracle",
                          "h2_recurrence", "h2_closed", "h2_oracle"],
    )
    cache = RecurrenceCache()

    start = _now_ms()
    rec3 = {n: cache.h3(n) for n in range(max_n + 1)}
    report.elapsed_ms["h3_recurrence"] = _now_ms() - start

    start = _now_ms()
    thr3 = {n: h3_thrall(n) for n in range(max_n + 1)}
    report.elapsed_ms["h3_thrall"] = _now_ms() - start

    start = _now_ms()
    rec2 = {n: cache.h2(n) for n in range(max_n + 1)}
    report.elapsed_ms["h2_recurrence"] = _now_ms() - start

    start = _now_ms()
    clo2 = {n: h2_closed(n) for n in range(max_n + 1)}
    report.elapsed_ms["h2_closed"] = _now_ms() - start

    for n in range(max_n + 1):
        _record_mismatches("h3 recurrence vs thrall", n,
                           {"recurrence": rec3[n], "thrall": thr3[n]}, report.mismatches)
        _record_mismatches("h2 recurrence vs closed", n,
                           {"recurrence": rec2[n], "closed": clo2[n]}, report.mismatches)
        for lam, c in rec3[n].terms():
            if c < 0 or len(lam) > 3:
                report.positivity_failures.append(("h3 nonnegative, at most 3 rows", n, list(lam), c))

    ora_hi = min(oracle_max_n, max_n)
    start = _now_ms()
    for n in range(ora_hi + 1):
        ora = plethysm_oracle(3, n, budget=budget)
        _record_mismatches("h3 vs oracle", n,
                           {"recurrence": rec3[n], "thrall": thr3[n], "oracle": ora},
                           report.mismatches)
    report.elapsed_ms["h3_oracle"] = _now_ms() - start

    start = _now_ms()
    for n in range(ora_hi + 1):
        ora = plethysm_oracle(2, n, budget=budget)
        _record_mismatches("h2 vs oracle", n,
                           {"recurrence": rec2[n], "closed": clo2[n], "oracle": ora},
                           report.mismatches)
    report.elapsed_ms["h2_oracle"] = _now_ms() - start
    return report


def cmd_verify(args) -> int:
    report = run_verify(args.max_n, args.oracle_max_n, args.budget)
    print(f"h3: recurrence vs thrall on n in [0,{args.max_n}], "
          f"vs oracle on n in [0,{report.oracle_range[1]}]")
    print(f"h2: recurrence vs closed on n in [0,{args.max_n}], "
          f"vs oracle on n in [0,{report.oracle_range[1]}]")
    for name, ms in report.elapsed_ms.items():
        print(f"  {name}: {ms:.1f} ms")
    for label, n, lam, coeffs in report.mismatches:
        rendered = " ".join(f"{name}={c}" for name, c in coeffs.items())
        print(f"MISMATCH [{label}] n={n} lambda={lam}: {rendered}")
    for check, n, lam, c in report.positivity_failures:
        print(f"POSITIVITY FAILURE [{check}] n={n} lambda={lam} coeff={c}")
    if report.passed:
        print("PASS (0 mismatches, 0 positivity failures)")
        return EXIT_OK
    print(f"FAIL ({len(report.mismatches)} mismatches, "
          f"{len(report.positivity_failures)} positivity failures)")
    return EXIT_FAIL


# ---------------------------------------------------------------------------
# foulkes / dent

def cmd_foulkes(args) -> int:
    if args.m > args.n:
        print("error: foulkes requires m <= n", file=sys.stderr)
        return EXIT_USAGE
    diff = foulkes_difference(args.m, args.n, budget=args.budget)
    positive = diff.is_schur_positive()
    print(f"h{args.n}[h{args.m}] - h{args.m}[h{args.n}] = {diff}")
    print(f"Schur-positive: {'true' if positive else 'false'}")
    return EXIT_OK if positive else EXIT_FAIL


def cmd_dent(args) -> int:
    if args.max_n < 2:
        print("error: --max-n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    cache = RecurrenceCache()
    failures = 0
    for n in range(2, args.max_n + 1):
        diff = dent_difference(args.m, n, cache)
        if diff.is_schur_positive():
            print(f"n={n}: positive ({len(diff)} terms)")
        else:
            failures += 1
            bad = [(list(lam), c) for lam, c in diff.terms() if c < 0]
            print(f"n={n}: NOT POSITIVE, negative terms {bad}")
    if failures:
        print(f"FAIL ({failures} of {args.max_n - 1} checks not Schur-positive)")
        return EXIT_FAIL
    print(f"PASS (h{args.m}[hn] - s_(2^{args.m}) odot h{args.m}[h(n-2)] "
          f"Schur-positive for 2 <= n <= {args.max_n})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench

@dataclass
class BenchResult:
    """Per-n best-of-repeats timings in milliseconds, keyed by method name."""

    max_n: int
    repeats: int
    millis: dict[tuple[int, str], float] = field(default_factory=dict)

    def total(self, method: str) -> float:
        return sum(ms for (_, name), ms in self.millis.items() if name == method)

    def rows(self) -> list[tuple[int, str, float]]:
        return sorted((n, name, ms) for (n, name), ms in self.millis.items())


def run_bench(max_n: int, repeats: int = 3, oracle_max_n: int = 8,
              budget: int | None = DEFAULT_BUDGET) -> BenchResult:
    """Time the three h3 methods; the recurrence runs memoized but cold per repeat."""
    result = BenchResult(max_n=max_n, repeats=repeats)

    def record(n: int, method: str, ms: float) -> None:
        key = (n, method)
        if key not in result.millis or ms < result.millis[key]:
            result.millis[key] = ms

    oracle_hi = min(oracle_max_n, max_n)
    for _ in range(repeats):
        cache = RecurrenceCache()
        for n in range(1, max_n + 1):
            start = _now_ms()
            cache.h3(n)
            record(n, "recurrence", _now_ms() - start)
        for n in range(1, max_n + 1):
            start = _now_ms()
            h3_thrall(n)
            record(n, "thrall", _now_ms() - start)
        clear_schur_poly_cache()  # oracle cold per repeat, like the recurrence
        for n in range(1, oracle_hi + 1):
            try:
                start = _now_ms()
                plethysm_oracle(3, n, budget=budget)
                record(n, "oracle", _now_ms() - start)
            except BudgetExceededError:
                break  # the count only grows with n
    return result


def cmd_bench(args) -> int:
    result = run_bench(args.max_n, args.repeats, args.oracle_max_n, args.budget)
    methods = ["recurrence", "thrall", "oracle"]
    print(f"best of {args.repeats} repeats, milliseconds")
    print("%6s%14s%14s%14s" % ("n", *methods))
    for n in range(1, args.max_n + 1):
        cells = []
        for method in methods:
            ms = result.millis.get((n, method))
            cells.append("%14.3f" % ms if ms is not None else "%14s" % "-")
        print("%6d%s" % (n, "".join(cells)))
    print("%6s%s" % ("total", "".join("%14.3f" % result.total(m) for m in methods)))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as handle:
            handle.write("n,method,millis\n")
            for n, method, ms in result.rows():
                handle.write(f"{n},{method},{ms:.3f}\n")
        print(f"wrote {args.csv}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point

def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plethysm",
        description="Exact Schur expansions of h2[hn] and h3[hn], cross-verified three ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the Schur expansion of h_m[h_n]")
    p.add_argument("--m", type=int, choices=(2, 3), default=3)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", default="recurrence",
                   choices=("recurrence", "thrall", "closed", "oracle"))
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                   help="oracle multiset budget")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="cross-check recurrence, closed form, and oracle")
    p.add_argument("--max-n", type=_nonneg, default=40)
    p.add_argument("--oracle-max-n", type=_nonneg, default=8)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("foulkes", help="check h_n[h_m] - h_m[h_n] for Schur positivity")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_foulkes)

    p = sub.add_parser("dent", help="check h_m[hn] - s_(2^m) odot h_m[h(n-2)] for positivity")
    p.add_argument("--m", type=int, choices=(2, 3), default=3)
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_dent)

    p = sub.add_parser("bench", help="time the recurrence, closed form, and oracle")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--repeats", type=_positive, default=3)
    p.add_argument("--oracle-max-n", type=_nonneg, default=8)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--csv", default=None, help="also write n,method,millis rows to this file")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
