"""Command-line front end with machine-readable, deterministic output.

Records go to stdout (line-delimited JSON or CSV), diagnostics to stderr.
Exact values are always emitted as decimal strings (num/den), never as
native numbers, since the denominators overflow 64-bit integers around
N = 65.  Stdout is byte-identical across runs with identical flags; wall
clock readings therefore only appear on stdout when explicitly requested
(``hit --timings``) or routed to a file (``bench --out``).

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 mathematical infeasibility (unreachable target, fully truncated runs).
"""

import argparse
import csv
import decimal
import json
import sys
import time
from decimal import Decimal
from fractions import Fraction

from .circulant import CirculantWalk, UnreachableTargetError, build_system, hitting_oracle
from .exact_linalg import is_identity, multiply
from .hitting import (
    FORWARD_ONE_TWO_STEPS,
    Method,
    hitting_corrected,
    hitting_corrected_vector,
    hitting_fibonacci,
    hitting_last,
    hitting_printed,
    hitting_printed_vector,
    hitting_rowsum,
    inverse_matrix,
    undirected_one_two_steps,
)
from .montecarlo import SimConfig, TruncatedSimulationError, compare_stats, simulate
from .sequences import (
    Identity,
    alternating_sum_closed_form,
    alternating_sum_oracle,
    check_identity,
    jacobsthal,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

HIT_CSV_COLUMNS = ["N", "steps", "method", "l", "num", "den", "approx", "runtime_ms"]


class UsageError(Exception):
    """Bad flag combination or value; maps to exit code 2."""


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnreachableTargetError, TruncatedSimulationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-hitting",
        description="Exact average hitting times of random walks on circulant digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    hit = sub.add_parser("hit", help="compute exact hitting times")
    hit.add_argument("--n", type=int, required=True, help="modulus N of the walk (vertices 0..N-1)")
    hit.add_argument("--steps", required=True, help="comma-separated step multiset, e.g. 1,2 or 1,2,-1,-2")
    group = hit.add_mutually_exclusive_group(required=True)
    group.add_argument("--l", type=int, help="single target vertex in 1..N-1")
    group.add_argument("--all", action="store_true", help="every target 1..N-1")
    hit.add_argument("--method", choices=[m.value for m in Method if m is not Method.MONTE_CARLO],
                     default="oracle", help="evaluation method (default: oracle)")
    hit.add_argument("--format", choices=["json", "csv"], default="json")
    hit.add_argument("--precision", type=int, default=12,
                     help="significant digits of the decimal approximation (default: 12)")
    hit.add_argument("--timings", action="store_true",
                     help="fill runtime_ms in records (makes stdout non-reproducible)")
    hit.set_defaults(handler=_cmd_hit)

    verify = sub.add_parser("verify", help="re-run the property suites and report counterexamples")
    verify.add_argument("--n-max", type=int, required=True, help="largest modulus to check (>= 3)")
    verify.add_argument("--suite", choices=["inverse", "identities", "closedforms", "all"],
                        default="all")
    verify.set_defaults(handler=_cmd_verify)

    sim = sub.add_parser("simulate", help="Monte-Carlo estimate of one hitting time")
    sim.add_argument("--n", type=int, required=True)
    sim.add_argument("--steps", required=True)
    sim.add_argument("--l", type=int, required=True)
    sim.add_argument("--trials", type=int, required=True)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--max-steps", type=int, default=10 ** 9,
                     help="per-trial step cap (default: 1e9)")
    sim.add_argument("--compare-exact", action="store_true",
                     help="also report the z-score against the exact oracle value")
    sim.set_defaults(handler=_cmd_simulate)

    bench = sub.add_parser("bench", help="time full-vector computation per method")
    bench.add_argument("--n-list", required=True, help="comma-separated moduli, each >= 3")
    bench.add_argument("--methods", default="corrected,oracle",
                       help="subset of oracle,rowsum,corrected,printed (default: corrected,oracle)")
    bench.add_argument("--out", default="bench.csv",
                       help="CSV destination; '-' streams to stdout (default: bench.csv)")
    bench.set_defaults(handler=_cmd_bench)

    return parser


def _parse_walk(n: int, steps_text: str) -> CirculantWalk:
    if n < 2:
        raise UsageError(f"--n must be >= 2, got {n}")
    parts = [p.strip() for p in steps_text.split(",")]
    try:
        steps = tuple(int(p) for p in parts if p != "")
    except ValueError:
        raise UsageError(f"--steps must be comma-separated integers, got {steps_text!r}")
    if not steps:
        raise UsageError("--steps must name at least one step")
    try:
        return CirculantWalk(n, steps)
    except ValueError as exc:
        raise UsageError(str(exc))


def _check_method_applies(method: Method, walk: CirculantWalk):
    n = walk.modulus
    if method in (Method.ROW_SUM, Method.CORRECTED, Method.PRINTED):
        if walk.steps != FORWARD_ONE_TWO_STEPS:
            raise UsageError(
                f"method {method.value!r} applies only to steps 1,2 "
                f"(got {','.join(map(str, walk.steps))})"
            )
        if n < 3:
            raise UsageError(f"method {method.value!r} needs N >= 3, got N={n}")
    elif method is Method.FIBONACCI:
        if n < 5:
            raise UsageError(f"method 'fibonacci' needs N >= 5, got N={n}")
        if walk.steps != undirected_one_two_steps(n):
            raise UsageError(
                "method 'fibonacci' applies only to the undirected walk with steps "
                f"1,2,{n - 2},{n - 1} (got {','.join(map(str, walk.steps))})"
            )


def format_approx(value: Fraction, digits: int) -> str:
    """Decimal-string approximation at ``digits`` significant figures, half-even."""
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = decimal.ROUND_HALF_EVEN
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _cmd_hit(args) -> int:
    walk = _parse_walk(args.n, args.steps)
    method = Method(args.method)
    _check_method_applies(method, walk)
    n = walk.modulus
    if args.all:
        targets = list(range(1, n))
    else:
        if not 1 <= args.l <= n - 1:
            raise UsageError(f"--l must be in 1..{n - 1}, got {args.l}")
        targets = [args.l]
    if args.precision < 1:
        raise UsageError(f"--precision must be >= 1, got {args.precision}")

    start = time.perf_counter()
    if method is Method.ORACLE:
        result = hitting_oracle(walk)
        values = [result.value(l) for l in targets]
    elif method is Method.ROW_SUM:
        result = hitting_rowsum(n)
        values = [result.value(l) for l in targets]
    elif method is Method.CORRECTED:
        values = [hitting_corrected(n, l) for l in targets]
    elif method is Method.PRINTED:
        values = [hitting_printed(n, l) for l in targets]
    else:
        values = [hitting_fibonacci(n, l) for l in targets]
    runtime_ms = (time.perf_counter() - start) * 1000.0 if args.timings else None

    records = [
        {
            "n": n,
            "steps": list(walk.steps),
            "method": method.value,
            "l": l,
            "value": {"num": str(v.numerator), "den": str(v.denominator)},
            "value_approx": format_approx(v, args.precision),
            "runtime_ms": runtime_ms,
        }
        for l, v in zip(targets, values)
    ]
    if args.format == "json":
        for record in records:
            print(json.dumps(record))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(HIT_CSV_COLUMNS)
        for record in records:
            writer.writerow([
                record["n"],
                ",".join(map(str, record["steps"])),
                record["method"],
                record["l"],
                record["value"]["num"],
                record["value"]["den"],
                record["value_approx"],
                "" if runtime_ms is None else runtime_ms,
            ])
    return EXIT_OK


def _cmd_simulate(args) -> int:
    walk = _parse_walk(args.n, args.steps)
    try:
        config = SimConfig(walk, target=args.l, trials=args.trials, seed=args.seed,
                           max_steps_per_trial=args.max_steps)
    except ValueError as exc:
        raise UsageError(str(exc))
    stats = simulate(config)
    record = {
        "n": walk.modulus,
        "steps": list(walk.steps),
        "l": args.l,
        "trials": stats.trials,
        "seed": args.seed,
        "max_steps_per_trial": args.max_steps,
        "mean": stats.mean,
        "variance": stats.variance,
        "stderr": stats.stderr,
        "truncated_trials": stats.truncated_trials,
    }
    exit_code = EXIT_OK
    notes = []
    if stats.truncated_trials == stats.trials:
        notes.append(f"all {stats.trials} trials hit the step cap; the target may be unreachable")
        exit_code = EXIT_INFEASIBLE
    elif args.compare_exact:
        if stats.truncated_trials:
            notes.append(f"refusing to compare: {stats.truncated_trials} trials hit the step cap")
            exit_code = EXIT_INFEASIBLE
        else:
            try:
                exact = hitting_oracle(walk).value(args.l)
            except UnreachableTargetError as exc:
                notes.append(f"no exact reference value: {exc}")
                exit_code = EXIT_INFEASIBLE
            else:
                verdict = compare_stats(stats, exact)
                record["exact"] = {"num": str(exact.numerator), "den": str(exact.denominator)}
                record["z_score"] = verdict.z_score
                record["verdict"] = "consistent" if verdict.consistent else "inconsistent"
    print(json.dumps(record))
    for note in notes:
        print(f"error: {note}", file=sys.stderr)
    return exit_code


def _cmd_bench(args) -> int:
    try:
        moduli = [int(p) for p in args.n_list.split(",") if p.strip() != ""]
    except ValueError:
        raise UsageError(f"--n-list must be comma-separated integers, got {args.n_list!r}")
    if not moduli:
        raise UsageError("--n-list must name at least one modulus")
    if any(n < 3 for n in moduli):
        raise UsageError(f"--n-list entries must be >= 3, got {args.n_list!r}")
    method_names = [p.strip() for p in args.methods.split(",") if p.strip() != ""]
    allowed = {m.value: m for m in (Method.ORACLE, Method.ROW_SUM, Method.CORRECTED, Method.PRINTED)}
    methods = []
    for name in method_names:
        if name not in allowed:
            raise UsageError(
                f"--methods entries must be among {','.join(sorted(allowed))} "
                f"(all on the steps-1,2 walk), got {name!r}"
            )
        methods.append(allowed[name])
    if not methods:
        raise UsageError("--methods must name at least one method")

    rows = []
    for n in moduli:
        jacobsthal(n)  # closed-form timings assume a warm table
        walk = CirculantWalk(n, FORWARD_ONE_TWO_STEPS)
        for method in methods:
            start = time.perf_counter()
            if method is Method.ORACLE:
                hitting_oracle(walk)
            elif method is Method.ROW_SUM:
                hitting_rowsum(n)
            elif method is Method.CORRECTED:
                hitting_corrected_vector(n)
            else:
                hitting_printed_vector(n)
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            rows.append((n, method.value, elapsed_ms))

    if args.out == "-":
        _write_bench_csv(sys.stdout, rows)
    else:
        with open(args.out, "w", newline="") as handle:
            _write_bench_csv(handle, rows)
        print(f"bench: {len(rows)} rows -> {args.out}")
    return EXIT_OK


def _write_bench_csv(handle, rows):
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(["N", "method", "runtime_ms"])
    for n, method, elapsed_ms in rows:
        writer.writerow([n, method, f"{elapsed_ms:.3f}"])


# ---------------------------------------------------------------------------
# verify suites


class _Report:
    """Collects suite lines plus the count of unexpected failures."""

    def __init__(self):
        self.lines = []
        self.checks = 0
        self.unexpected = 0

    def expected_pass(self, name, total, failures):
        self.checks += total
        self.unexpected += len(failures)
        self.lines.append(f"{name}: {total - len(failures)}/{total} passed")
        for line in failures:
            self.lines.append(f"  counterexample {line}")

    def documented_mismatch(self, name, detail, ok):
        self.checks += 1
        if ok:
            self.lines.append(f"{name}: {detail} (documented mismatch, asserted)")
        else:
            self.unexpected += 1
            self.lines.append(f"{name}: ASSERTION FAILED: {detail}")


def _verify_inverse(n_max: int, report: _Report):
    failures = []
    for n in range(3, n_max + 1):
        system = build_system(CirculantWalk(n, FORWARD_ONE_TWO_STEPS))
        product = multiply(system.matrix, inverse_matrix(n))
        if not is_identity(product):
            i, j, value = next(
                (i, j, v)
                for i, row in enumerate(product.data)
                for j, v in enumerate(row)
                if v != (1 if i == j else 0)
            )
            failures.append(f"N={n}: product[{i}][{j}] = {value}, expected {1 if i == j else 0}")
    report.expected_pass("inverse: system times closed-form inverse is identity",
                         n_max - 2, failures)


def _verify_identities(n_max: int, report: _Report):
    groups = [
        ("closed-form", [dict(n=n) for n in range(0, n_max + 1)]),
        ("sum-adjacent", [dict(n=n) for n in range(1, n_max + 1)]),
        ("double-step", [dict(n=n) for n in range(1, n_max + 1)]),
        ("addition-law", [dict(n=n, m=m) for n in range(1, n_max + 1) for m in range(1, n_max + 1)]),
        ("convolution", [dict(n=n, j=j) for n in range(2, n_max + 1) for j in range(1, n)]),
        ("weighted-pow-sum", [dict(n=n) for n in range(1, n_max + 1)]),
    ]
    for name, arg_list in groups:
        identity = Identity(name)
        failures = [str(c) for c in (check_identity(identity, **kw) for kw in arg_list) if not c.holds]
        report.expected_pass(f"identities[{name}]", len(arg_list), failures)

    # The alternating-sum identity is false as stated; assert that it fails
    # and that the validated replacement closed form matches the direct sum.
    checks = [check_identity(Identity.ALTERNATING_SUM, n) for n in range(1, n_max + 1)]
    holding = [str(c) for c in checks if c.holds]
    report.expected_pass("identities[alternating-sum holds nowhere as stated]",
                         len(checks), holding)
    first = checks[0]
    report.documented_mismatch(
        "identities[alternating-sum]",
        f"smallest counterexample n=1: lhs={first.lhs}, rhs={first.rhs}",
        not first.holds and first.lhs == 1 and first.rhs == Fraction(1, 3),
    )
    replacement_failures = [
        f"replacement(n={n}): closed form {alternating_sum_closed_form(n)} != sum {alternating_sum_oracle(n)}"
        for n in range(1, n_max + 1)
        if alternating_sum_closed_form(n) != alternating_sum_oracle(n)
    ]
    report.expected_pass("identities[alternating-sum replacement vs direct sum]",
                         n_max, replacement_failures)


def _verify_closedforms(n_max: int, report: _Report):
    rowsum_bad = []
    corrected_bad = []
    boundary_bad = []
    last_bad = []
    printed_interior_mismatches = 0
    interior_total = 0
    oracle_at_5 = None
    for n in range(3, n_max + 1):
        oracle = hitting_oracle(CirculantWalk(n, FORWARD_ONE_TWO_STEPS))
        if n == 5:
            oracle_at_5 = oracle
        rowsum = hitting_rowsum(n)
        for l in range(1, n):
            if rowsum.value(l) != oracle.value(l):
                rowsum_bad.append(f"N={n}, l={l}: rowsum={rowsum.value(l)}, oracle={oracle.value(l)}")
            if hitting_corrected(n, l) != oracle.value(l):
                corrected_bad.append(f"N={n}, l={l}: corrected={hitting_corrected(n, l)}, oracle={oracle.value(l)}")
            if l < n - 1:
                interior_total += 1
                if hitting_printed(n, l) != oracle.value(l):
                    printed_interior_mismatches += 1
        if hitting_printed(n, n - 1) != oracle.value(n - 1):
            boundary_bad.append(
                f"N={n}: printed at l=N-1 gives {hitting_printed(n, n - 1)}, oracle={oracle.value(n - 1)}")
        if hitting_last(n) != rowsum.value(n - 1):
            last_bad.append(f"N={n}: last-target form {hitting_last(n)} != rowsum {rowsum.value(n - 1)}")
    pair_count = sum(n - 1 for n in range(3, n_max + 1))
    report.expected_pass("closedforms[rowsum vs oracle]", pair_count, rowsum_bad)
    report.expected_pass("closedforms[corrected vs oracle]", pair_count, corrected_bad)
    report.expected_pass("closedforms[printed at l=N-1 vs oracle]", n_max - 2, boundary_bad)
    report.expected_pass("closedforms[last-target form vs rowsum]", n_max - 2, last_bad)
    report.lines.append(
        f"closedforms[printed away from l=N-1]: differs from oracle at "
        f"{printed_interior_mismatches}/{interior_total} interior targets (documented, expected)"
    )
    if n_max >= 5:
        printed51 = hitting_printed(5, 1)
        oracle51 = oracle_at_5.value(1)
        report.documented_mismatch(
            "closedforms[printed at N=5, l=1]",
            f"printed={printed51}, oracle={oracle51}",
            printed51 == Fraction(24, 11) and oracle51 == Fraction(34, 11),
        )

    fib_bad = []
    fib_total = 0
    for n in range(5, n_max + 1):
        oracle = hitting_oracle(CirculantWalk(n, undirected_one_two_steps(n)))
        for l in range(1, n):
            fib_total += 1
            if hitting_fibonacci(n, l) != oracle.value(l):
                fib_bad.append(f"N={n}, l={l}: fibonacci={hitting_fibonacci(n, l)}, oracle={oracle.value(l)}")
    report.expected_pass("closedforms[fibonacci vs oracle on the undirected walk]",
                         fib_total, fib_bad)


def _cmd_verify(args) -> int:
    if args.n_max < 3:
        raise UsageError(f"--n-max must be >= 3, got {args.n_max}")
    report = _Report()
    if args.suite in ("inverse", "all"):
        _verify_inverse(args.n_max, report)
    if args.suite in ("identities", "all"):
        _verify_identities(args.n_max, report)
    if args.suite in ("closedforms", "all"):
        _verify_closedforms(args.n_max, report)
    for line in report.lines:
        print(line)
    if report.unexpected:
        print(f"verify: FAIL ({report.unexpected} unexpected failures in {report.checks} checks)")
        return EXIT_VERIFY_FAILED
    print(f"verify: PASS ({report.checks} checks)")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
