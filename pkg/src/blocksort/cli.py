"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from decimal import Context, Decimal
from fractions import Fraction

from . import averages, block_sorter, cycle_products, hultman, verify
from .cycle_graph import bi_distance, graph_cycle_count, graph_export
from .perm import Permutation

SCHEMA = "blocksort/1"
DEFAULT_MC_TRIALS = 100_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fraction_float(x: Fraction) -> str:
    return str(Context(prec=20).divide(Decimal(x.numerator), Decimal(x.denominator)))


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_json(obj: dict, out) -> None:
    out.write(json.dumps({"schema": SCHEMA, **obj}) + "\n")


def _in_range(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise UsageError(f"{name}={value} outside supported range {lo}..{hi}")


def cmd_distance(args, out):
    p = _perm(args.perm)
    _emit_json({"input": args.perm, "c_graph": graph_cycle_count(p.image), "distance": bi_distance(p)}, out)
    return 0


def cmd_sort(args, out):
    p = _perm(args.perm)
    cert = block_sorter.greedy_sort(p)
    _emit_json(
        {
            "input": args.perm,
            "distance": cert.claimed_distance,
            "moves": [m.as_list() for m in cert.moves],
            "states": [str(s) for s in cert.states],
        },
        out,
    )
    return 0


def cmd_graph(args, out):
    p = _perm(args.perm)
    _emit_json({"input": args.perm, **graph_export(p)}, out)
    return 0


def _hultman_rows(n: int, method: str, jobs: int):
    table = hultman.hultman_table(n, method, jobs)
    for k, count in enumerate(table.row(), 1):
        yield n, k, count, method


def cmd_hultman(args, out):
    hi = {"direct": hultman.DIRECT_MAX_N, "product": hultman.PRODUCT_MAX_N}.get(args.method, 10_000)
    _in_range("n", args.n, 1, hi)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "k", "count", "method"])
    w.writerows(_hultman_rows(args.n, args.method, args.jobs))
    return 0


def cmd_table(args, out):
    _in_range("max-n", args.max_n, 1, 10_000)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "k", "count", "method"])
    for n in range(1, args.max_n + 1):
        w.writerows(_hultman_rows(n, "formula", 1))
    return 0


def _parse_pair(text: str | None, h: int) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        i, j = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--pair expects i,j, got {text!r}") from None
    if not (1 <= i <= h and 1 <= j <= h) or i == j:
        raise UsageError(f"--pair needs distinct values in 1..{h}, got {text!r}")
    return i, j


def cmd_prob(args, out):
    h = args.h
    if h < 2:
        raise UsageError(f"h={h} outside supported range 2..")
    pair = _parse_pair(args.pair, h)
    formula = cycle_products.stanley_probability(h)
    exact = args.exact or (args.trials is None and h <= cycle_products.REDUCED_MAX_H)
    report = {"h": h, "pair": list(pair or (1, 2))}
    if exact:
        if pair is not None and h <= cycle_products.EXHAUSTIVE_MAX_H:
            value = cycle_products.same_cycle_exhaustive(h, *pair)
            method = "exhaustive"
        else:
            _in_range("h", h, 2, cycle_products.REDUCED_MAX_H)
            value = cycle_products.same_cycle_exhaustive_reduced(h)
            method = "exhaustive_reduced"
        report.update(method=method, value=fraction_str(value), formula=fraction_str(formula), agrees=value == formula)
    else:
        trials = args.trials or DEFAULT_MC_TRIALS
        if trials < 1:
            raise UsageError("--trials must be at least 1")
        i, j = pair or (1, 2)
        est = cycle_products.same_cycle_montecarlo(h, i, j, trials, args.seed, args.jobs)
        err = abs(est.value - float(formula))
        report.update(
            method="montecarlo",
            value=est.value,
            stderr=est.stderr,
            trials=trials,
            seed=args.seed,
            jobs=args.jobs,
            formula=fraction_str(formula),
            agrees=err <= verify.MC_SIGMAS * est.stderr,
        )
    _emit_json(report, out)
    return 0


def cmd_averages(args, out):
    _in_range("max-n", args.max_n, 1, 10_000)
    _in_range("brute-max", args.brute_max, 0, averages.B_BRUTE_MAX_N)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "a_exact", "a_float", "b_exact", "b_float", "brute_checked"])
    status = 0
    for n in range(1, args.max_n + 1):
        a = averages.a_closed(n)
        b = averages.b_closed(n)
        checked = n <= args.brute_max
        if checked and n >= 2:
            if averages.a_brute(n) != a or averages.b_brute(n) != b:
                print(f"brute-force mismatch at n={n}", file=sys.stderr)
                status = 2
        w.writerow([n, fraction_str(a), fraction_float(a), fraction_str(b), fraction_float(b), str(checked).lower()])
    return status


def cmd_verify(args, out):
    results = verify.run_checks(args.level, args.seed, args.jobs)
    out.write(f"level={args.level} seed={args.seed} jobs={args.jobs}\n")
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.passed for r in results) else 2


def build_parser() -> argparse.ArgumentParser:
    seed = verify.default_seed()
    jobs = os.cpu_count() or 1
    parser = _Parser(prog="blocksort", description="Sorting permutations by block interchanges.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, help_ in (
        ("distance", cmd_distance, "block-interchange distance of a permutation"),
        ("sort", cmd_sort, "minimal sorting certificate"),
        ("graph", cmd_graph, "cycle graph as JSON"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("perm", help='one-line notation, e.g. "3 4 1 7 5 6 2" or 3417562')
        p.set_defaults(func=fn)

    p = sub.add_parser("hultman", help="one row of Hultman numbers as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=hultman.METHODS, default="formula")
    p.add_argument("--jobs", type=int, default=jobs)
    p.set_defaults(func=cmd_hultman)

    p = sub.add_parser("prob", help="same-cycle probability for products of two h-cycles")
    p.add_argument("--h", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--pair")
    p.add_argument("--jobs", type=int, default=jobs)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("averages", help="exact average cycle counts and distances as CSV")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--brute-max", type=int, default=6)
    p.set_defaults(func=cmd_averages)

    p = sub.add_parser("table", help="Hultman triangle as CSV")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the reproduction checks")
    p.add_argument("--level", choices=verify.LEVELS, default="desk")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--jobs", type=int, default=jobs)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"blocksort {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
