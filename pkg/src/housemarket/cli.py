"""Command-line interface.

    housemarket gen {random,consensual,worstcase,fooling} N [--seed S]
    housemarket run {crawler,ttc} [FILE] [--transcript]
    housemarket check {diver,cycle,brute} [FILE] [--transcript]
    housemarket bench [--max-n N] [--min-n N] [--families F,...] [--reps K]

FILE defaults to standard input. Exit codes: 0 success or PO, 2 bad input,
3 NOT-PO, 4 instance too large for the brute-force oracle.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as benchmod
from .core import InvalidInstance
from .domains import (
    gen_crawler_worstcase,
    gen_random_consensual,
    gen_random_fooling,
    gen_random_sp,
)
from .io import InstanceSyntaxError, parse_instance, serialize_instance
from .mechanisms import crawler, cycle_check_po, diver, ttc
from .oracle import InstanceTooLarge, brute_force_po

EXIT_OK, EXIT_INPUT, EXIT_NOT_PO, EXIT_TOO_LARGE = 0, 2, 3, 4

GENERATORS = {
    "random": gen_random_sp,
    "consensual": gen_random_consensual,
    "worstcase": lambda n, seed: gen_crawler_worstcase(n),
    "fooling": gen_random_fooling,
}


class UsageError(Exception):
    pass


def _seed(text):
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _global_flags(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--seed", type=_seed, default=default if suppress else 0,
                        help="generator seed (unsigned 64-bit, default 0)")
    parser.add_argument("--transcript", action="store_true",
                        default=default if suppress else False,
                        help="append the communication transcript")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="housemarket",
        description="Crawler, Diver and friends for single-peaked house markets.",
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated instance")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("n", type=int)
    _global_flags(p, suppress=True)

    p = sub.add_parser("run", help="run an allocation mechanism")
    p.add_argument("mechanism", choices=("crawler", "ttc"))
    p.add_argument("file", nargs="?", default="-")
    _global_flags(p, suppress=True)

    p = sub.add_parser("check", help="decide whether the endowment is Pareto-optimal")
    p.add_argument("method", choices=("diver", "cycle", "brute"))
    p.add_argument("file", nargs="?", default="-")
    _global_flags(p, suppress=True)

    p = sub.add_parser("bench", help="time crawler and diver over doubling n")
    p.add_argument("--max-n", type=int, default=64000)
    p.add_argument("--min-n", type=int, default=1000)
    p.add_argument("--families", default="worstcase",
                   help="comma-separated: " + ",".join(benchmod.FAMILIES))
    p.add_argument("--reps", type=int, default=5)
    _global_flags(p, suppress=True)
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _alloc_line(allocation):
    return "alloc " + " ".join(str(r + 1) for r in allocation) + "\n"


def _cycle_line(cycle):
    return "cycle " + " ".join(f"a{a + 1}:r{r + 1}" for a, r in cycle.pairs()) + "\n"


def cmd_gen(args, out):
    if args.n < 1 or (args.family == "worstcase" and args.n < 2) or (
        args.family == "fooling" and args.n < 2
    ):
        raise UsageError(f"n={args.n} is too small for family {args.family}")
    out.write(serialize_instance(GENERATORS[args.family](args.n, args.seed)))
    return EXIT_OK


def cmd_run(args, out):
    if args.transcript and args.mechanism == "ttc":
        raise UsageError("ttc produces no transcript")
    instance = parse_instance(_read(args.file), single_peaked=args.mechanism == "crawler")
    if args.mechanism == "crawler":
        allocation, _, transcript = crawler(instance)
        out.write(_alloc_line(allocation))
        if args.transcript:
            out.write(transcript.serialize())
    else:
        out.write(_alloc_line(ttc(instance)))
    return EXIT_OK


def cmd_check(args, out):
    if args.transcript and args.method != "diver":
        raise UsageError(f"method {args.method} produces no transcript")
    instance = parse_instance(_read(args.file), single_peaked=args.method == "diver")
    transcript = None
    if args.method == "diver":
        verdict, transcript = diver(instance)
    elif args.method == "cycle":
        verdict = cycle_check_po(instance)
    else:
        verdict = brute_force_po(instance)
    out.write(verdict.token + "\n")
    if not verdict.is_po:
        out.write(_cycle_line(verdict.cycle))
    if args.transcript:
        out.write(transcript.serialize())
    return EXIT_OK if verdict.is_po else EXIT_NOT_PO


def cmd_bench(args, out):
    families = [f for f in args.families.split(",") if f]
    unknown = [f for f in families if f not in benchmod.FAMILIES]
    if unknown:
        raise UsageError(f"unknown family {unknown[0]!r}")
    if args.max_n < 100:
        raise UsageError("--max-n must be at least 100")
    if args.reps < 1:
        raise UsageError("--reps must be positive")
    rows = benchmod.run_bench(args.max_n, families, min_n=args.min_n, reps=args.reps)
    out.write(benchmod.format_table(rows))
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "run": cmd_run, "check": cmd_check, "bench": cmd_bench}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # argparse binds an optional positional before later flags are seen, so
    # "run crawler --transcript FILE" leaves FILE over; route it back.
    if len(extra) == 1 and not extra[0].startswith("-") and getattr(args, "file", None) == "-":
        args.file = extra[0]
    elif extra:
        parser.error("unrecognized arguments: " + " ".join(extra))
    try:
        return COMMANDS[args.command](args, out)
    except (InstanceSyntaxError, InvalidInstance, UsageError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InstanceTooLarge as exc:
        err.write(f"error: {exc}\n")
        return EXIT_TOO_LARGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
