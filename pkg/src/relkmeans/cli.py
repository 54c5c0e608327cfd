"""Command-line front end: ``relkmeans --clusters N [options]``.

Exit status: 0 success, 2 usage error, 3 bad input file, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .errors import ConvergenceError, InputFormatError
from .io import parse_input, square_distances, write_output
from .search import SearchParams, run_search

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_NUMERIC = 4


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="relkmeans",
        description="Relational k-means clustering of a distance matrix.",
    )
    parser.add_argument("-N", "--clusters", type=_positive_int, required=True,
                        help="number of clusters")
    parser.add_argument("-K", "--max-failed", type=_positive_int, default=20,
                        help="stop after this many consecutive non-improving attempts (default: 20)")
    parser.add_argument("--threads", type=_positive_int, default=os.cpu_count() or 1,
                        help="attempts run concurrently (default: logical processor count)")
    parser.add_argument("--seed", type=_seed, default=0, help="master random seed (default: 0)")
    parser.add_argument("--spread", action="store_true",
                        help="apply the beta-spread transformation before clustering")
    parser.add_argument("--max-iterations", type=_positive_int, default=1000,
                        help="iteration cap per attempt (default: 1000)")
    parser.add_argument("--input", default="-", help="input file, '-' for stdin (default)")
    parser.add_argument("--output", default="-", help="output file, '-' for stdout (default)")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    def diag(message):
        print(message, file=sys.stderr)

    try:
        dataset = parse_input(_read(args.input))
    except OSError as exc:
        diag(f"relkmeans: cannot read --input {args.input}: {exc}")
        return EXIT_INPUT
    except UnicodeDecodeError as exc:
        diag(f"relkmeans: --input {args.input} is not valid UTF-8: {exc}")
        return EXIT_INPUT
    except InputFormatError as exc:
        diag(f"relkmeans: {args.input}: {exc}")
        return EXIT_INPUT

    if args.clusters > dataset.n:
        diag(f"relkmeans: --clusters {args.clusters} exceeds the number of objects ({dataset.n})")
        return EXIT_USAGE
    if any(";" in name for name in dataset.names):
        diag("relkmeans: warning: some object names contain ';', output will be ambiguous")

    params = SearchParams(
        n_clusters=args.clusters,
        max_failed_attempts=args.max_failed,
        master_seed=args.seed,
        threads=args.threads,
        max_iterations=args.max_iterations,
        apply_spread=args.spread,
    )
    start = time.perf_counter()
    try:
        outcome = run_search(square_distances(dataset), params)
    except ConvergenceError as exc:
        diag(f"relkmeans: beta-spread failed: {exc}")
        return EXIT_NUMERIC
    elapsed = time.perf_counter() - start

    if outcome.spread is not None:
        diag(f"beta = {outcome.spread.beta!r} (Gram min eigenvalue {outcome.spread.min_eigenvalue!r})")
    improvements = sum(a.improved for a in outcome.attempts)
    truncated = sum(a.truncated for a in outcome.attempts)
    diag(
        f"{outcome.attempts_executed} attempts, {improvements} improved the best, "
        f"best value {outcome.best_value!r}, {elapsed:.2f} s"
    )
    if truncated:
        diag(f"warning: {truncated} attempts hit --max-iterations {args.max_iterations}")

    try:
        _write(args.output, write_output(dataset.names, outcome))
    except OSError as exc:
        diag(f"relkmeans: cannot write --output {args.output}: {exc}")
        return EXIT_INPUT
    return EXIT_OK
