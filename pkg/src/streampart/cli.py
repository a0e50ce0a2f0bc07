"""Command line interface.

Four subcommands: `gen` writes a weight stream, `solve` runs one of the
streaming solvers and prints a JSON result object, `oracle` prints the exact
optimum, `bench` runs a config of generator/solver rows and writes CSV.

Streams are whitespace-separated non-negative integers; `solve` and `oracle`
read them from --input or stdin without materializing the file when the
solver itself is one-pass.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import ExitStack

from .core import as_fraction, format_weights, iter_weights
from .generators import GeneratorSpec
from .oracle import opt_bottleneck_binsearch, opt_bottleneck_dp
from .schedulers import (
    solve_known_max,
    solve_known_max_length,
    solve_known_total,
    solve_unknown_part,
    solve_unknown_partb,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streampart",
        description="One-pass partitioning of integer weight streams into "
        "p contiguous blocks with a small maximum block weight.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a weight stream")
    gen.add_argument("--kind", required=True,
                     choices=["uniform", "constant", "spike", "yz", "index"])
    gen.add_argument("--n", type=int, help="stream length")
    gen.add_argument("--m", type=int, help="maximum weight")
    gen.add_argument("--t", type=int, help="pair count (yz)")
    gen.add_argument("--i", type=int, dest="i",
                     help="second-half index (yz) or query index (index)")
    gen.add_argument("--bits", type=str, help="bit string for the index kind")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", type=str, help="output path (default stdout)")

    solve = sub.add_parser("solve", help="solve a stream with a one-pass algorithm")
    solve.add_argument("--p", type=int, required=True, help="number of blocks")
    solve.add_argument("--mode", choices=["part", "partb"], default="part")
    solve.add_argument("--know", choices=["none", "m", "mn", "s"], default="none")
    solve.add_argument("--epsilon", type=str, help="accuracy parameter, e.g. 1/64")
    solve.add_argument("--m", type=int, help="declared maximum weight")
    solve.add_argument("--n", type=int, help="declared length")
    solve.add_argument("--s", type=int, help="declared total weight")
    solve.add_argument("--input", type=str, help="input path (default stdin)")

    oracle = sub.add_parser("oracle", help="compute the exact optimum offline")
    oracle.add_argument("--p", type=int, required=True)
    oracle.add_argument("--method", choices=["binsearch", "dp"], default="binsearch")
    oracle.add_argument("--input", type=str, help="input path (default stdin)")

    bench = sub.add_parser("bench", help="run a benchmark config, write CSV")
    bench.add_argument("--config", type=str, required=True, help="JSON row list")
    bench.add_argument("--out", type=str, help="CSV path (default stdout)")

    return parser


class UsageError(Exception):
    """Usage problem detected after argparse; exits with status 2."""


def _require(args: argparse.Namespace, names: list[str], context: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + name for name in missing)
        raise UsageError(f"{context} requires {flags}")


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GeneratorSpec(kind=args.kind, n=args.n, m=args.m, t=args.t,
                         i=args.i, bits=args.bits, seed=args.seed)
    weights = spec.make()
    text = format_weights(weights) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    epsilon = None if args.epsilon is None else as_fraction(args.epsilon)
    with ExitStack() as stack:
        if args.input:
            fp = stack.enter_context(open(args.input, "r", encoding="ascii"))
        else:
            fp = sys.stdin
        stream = iter_weights(fp)
        if args.know == "s":
            _require(args, ["epsilon", "s"], "--know s")
            result = solve_known_total(stream, args.p, epsilon, args.s, mode=args.mode)
        elif args.know == "mn":
            _require(args, ["epsilon", "m", "n"], "--know mn")
            result = solve_known_max_length(stream, args.p, epsilon, args.m,
                                            args.n, mode=args.mode)
        elif args.know == "m":
            _require(args, ["epsilon", "m"], "--know m")
            result = solve_known_max(stream, args.p, epsilon, args.m, mode=args.mode)
        elif args.mode == "part":
            result = solve_unknown_part(stream, args.p)
        else:
            result = solve_unknown_partb(stream, args.p)
    json.dump(result.to_json_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    with ExitStack() as stack:
        if args.input:
            fp = stack.enter_context(open(args.input, "r", encoding="ascii"))
        else:
            fp = sys.stdin
        weights = list(iter_weights(fp))
    if args.method == "dp":
        answer = opt_bottleneck_dp(weights, args.p)
    else:
        answer = opt_bottleneck_binsearch(weights, args.p)
    json.dump({"optimum": answer.optimum, "method": answer.method,
               "n": len(weights), "p": args.p}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    from .bench import load_config, run_bench, write_csv

    with open(args.config, "r", encoding="utf-8") as fp:
        rows = load_config(fp)
    records = run_bench(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fp:
            write_csv(records, fp)
    else:
        write_csv(records, sys.stdout)
    failed = [r for r in records if r.error]
    if failed:
        sys.stderr.write(f"streampart bench: {len(failed)} of {len(records)} rows failed\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"gen": cmd_gen, "solve": cmd_solve, "oracle": cmd_oracle,
                "bench": cmd_bench}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"streampart: {exc}\n")
        return 2
    except (ValueError, RuntimeError, OSError) as exc:
        sys.stderr.write(f"streampart: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
