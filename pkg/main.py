# файл main.py

import argparse
import logging
import re
import sys
import time
from typing import List, Optional, Tuple

from pydantic import ValidationError

import crud
import database
import models  # noqa: F401  registers the ledger tables
import schemas
from cayley import bfs_lengths, oracle_lambda
from config import Settings, get_settings
from dataset_io import emit_bfile, emit_lambda_table, emit_length_histogram, emit_length_vs_g, write_output
from errors import ComputationError, GadicError, UsageError
from gadic import expand, g_length, lambda_digits, lambda_value
from plength import (
    goldbach_pair,
    plength_upper,
    restricted_prime_length,
    sieve_length3_candidates,
    sun_class_member,
    three_prime_decomposition,
    verify_sun_example,
)
from primes import factor, is_prime

logger = logging.getLogger(__name__)

DECIMAL = re.compile(r"^[+-]?[0-9]+$")


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def decimal(text: str) -> int:
    """Parses a decimal integer of any size."""
    if not DECIMAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"malformed integer: {text!r}")
    return int(text)


def window(text: str) -> Tuple[int, int]:
    """Parses ``lo:hi``."""
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"malformed window, expected lo:hi: {text!r}")
    return decimal(lo), decimal(hi)


def decimal_list(text: str) -> List[int]:
    """Parses a comma-separated list of decimal integers."""
    return [decimal(part) for part in text.split(",") if part.strip()]


def descriptor(text: str) -> schemas.GeneratingSetDescriptor:
    try:
        return schemas.GeneratingSetDescriptor.parse(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(exc.detail) from exc


def _format_factors(factors) -> str:
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors.items())


def cmd_expand(args, settings: Settings) -> str:
    expansion = expand(args.n, args.base)
    return f"{expansion.digits}\nlength {expansion.length}\n"


def cmd_length(args, settings: Settings) -> str:
    return f"{g_length(args.n, args.base)}\n"


def cmd_lambda(args, settings: Settings) -> str:
    text = f"{lambda_value(args.base, args.k)}\n"
    if args.digits:
        text += f"{lambda_digits(args.base, args.k).digits}\n"
    return text


def cmd_lambda_table(args, settings: Settings) -> str:
    try:
        spec = schemas.TableSpec(
            bases=args.bases or list(schemas.DEFAULT_BASES),
            k_max=args.kmax,
            output_format=args.format or settings.output_format,
        )
    except ValidationError as exc:
        raise UsageError(f"invalid table: {exc.errors()[0]['msg']}") from exc
    write_output(emit_lambda_table(spec), args.output)
    return ""


def cmd_oracle(args, settings: Settings) -> str:
    table = bfs_lengths(args.set, args.window, args.margin, settings)
    return "n,length\n" + "".join(f"{n},{length}\n" for n, length in table.items())


def cmd_oracle_lambda(args, settings: Settings) -> str:
    found = oracle_lambda(args.set, args.k, args.bound, args.margin, settings)
    return f"{'not-found' if found is None else found}\n"


def cmd_plength(args, settings: Settings) -> str:
    report = plength_upper(args.n, args.cap, args.bound, settings)
    lines = [
        f"n {report.n}",
        f"upper_bound {report.upper_bound}",
        f"status {report.status}",
        "witness " + " ".join(str(term) for term in report.terms),
        f"two_power_cap {report.two_power_cap}",
    ]
    if report.candidate:
        lines.append("factors " + _format_factors(factor(abs(report.n), settings)))
    return "\n".join(lines) + "\n"


def cmd_goldbach(args, settings: Settings) -> str:
    return " ".join(map(str, goldbach_pair(args.n, settings))) + "\n"


def cmd_three_primes(args, settings: Settings) -> str:
    return " ".join(map(str, three_prime_decomposition(args.n, settings))) + "\n"


def cmd_sieve3(args, settings: Settings) -> str:
    cap = settings.sieve_two_power_cap if args.cap is None else args.cap
    started = time.perf_counter()
    survivors = sieve_length3_candidates(args.lo, args.hi, cap, args.threads, settings)
    elapsed = time.perf_counter() - started
    if args.store:
        database.Base.metadata.create_all(bind=database.engine)
        with database.get_db() as db:
            run = crud.create_sieve_run(db, schemas.SieveRunCreate(
                lo=args.lo,
                hi=args.hi,
                two_power_cap=cap,
                elapsed_seconds=elapsed,
                survivors=survivors,
            ))
            logger.info("stored sieve run %d", run.id)
    return f"two_power_cap {cap}\ncandidates {len(survivors)}\n" + "".join(f"{n}\n" for n in survivors)


def cmd_frontier(args, settings: Settings) -> str:
    database.Base.metadata.create_all(bind=database.engine)
    cap = settings.sieve_two_power_cap if args.cap is None else args.cap
    with database.get_db() as db:
        frontier = crud.sieve_frontier(db, cap)
    first = "none" if frontier.first_candidate is None else frontier.first_candidate
    return f"two_power_cap {frontier.two_power_cap}\ncovered_through {frontier.covered_through}\nfirst_candidate {first}\n"


def cmd_runs(args, settings: Settings) -> str:
    database.Base.metadata.create_all(bind=database.engine)
    with database.get_db() as db:
        runs = [schemas.SieveRun.model_validate(run) for run in crud.get_sieve_runs(db, args.skip, args.limit)]
    return "".join(
        f"{run.id} {run.lo} {run.hi} cap={run.two_power_cap} survivors={run.survivor_count} "
        f"seconds={run.elapsed_seconds:.2f}\n"
        for run in runs
    )


def cmd_sun_verify(args, settings: Settings) -> str:
    report = verify_sun_example(settings=settings)
    text = "".join(
        f"{'PASS' if check.passed else 'FAIL'} {check.name}: {check.detail}\n" for check in report.checks
    )
    if not report.passed:
        sys.stdout.write(text)
        raise ComputationError("Sun example verification failed")
    return text


def cmd_sun_member(args, settings: Settings) -> str:
    return "true\n" if sun_class_member(args.x) else "false\n"


def cmd_fig2(args, settings: Settings) -> str:
    write_output(emit_length_vs_g(args.n, args.gmin, args.gmax), args.output)
    return ""


def cmd_fig3(args, settings: Settings) -> str:
    write_output(emit_length_histogram(args.base, args.nmax), args.output)
    return ""


def cmd_bfile(args, settings: Settings) -> str:
    write_output(emit_bfile(args.base, args.count), args.output)
    return ""


def cmd_factor(args, settings: Settings) -> str:
    return _format_factors(factor(args.n, settings)) + "\n"


def cmd_is_prime(args, settings: Settings) -> str:
    verdict = is_prime(args.n, settings)
    return f"{verdict.status.value} ({verdict.note})\n"


def cmd_restricted(args, settings: Settings) -> str:
    return f"{restricted_prime_length(args.n, args.exclude, args.cap, settings=settings)}\n"


def build_parser() -> ArgumentParser:
    """
    Builds the command-line parser.

    Returns:
        ArgumentParser: Parser whose subcommands carry their handler in ``handler``.
    """

    parser = ArgumentParser(prog="gadic", description="g-adic lengths, Cayley word metrics and prime-power lengths")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text):
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("expand", cmd_expand, "minimal g-adic expansion of n")
    sub.add_argument("n", type=decimal)
    sub.add_argument("--base", type=decimal, required=True)

    sub = command("length", cmd_length, "g-length of n")
    sub.add_argument("n", type=decimal)
    sub.add_argument("--base", type=decimal, required=True)

    sub = command("lambda", cmd_lambda, "smallest positive integer of g-length k")
    sub.add_argument("--base", type=decimal, required=True)
    sub.add_argument("--k", type=decimal, required=True)
    sub.add_argument("--digits", action="store_true", help="also print its expansion")

    sub = command("lambda-table", cmd_lambda_table, "table of smallest integers of each length")
    sub.add_argument("--bases", type=decimal_list)
    sub.add_argument("--kmax", type=decimal, default=20)
    sub.add_argument("--format", choices=["csv", "json", "text"])
    sub.add_argument("--output")

    sub = command("oracle", cmd_oracle, "BFS word lengths on a window")
    sub.add_argument("--set", type=descriptor, required=True)
    sub.add_argument("--window", type=window, required=True, help="lo:hi, lo may be negative")
    sub.add_argument("--margin", type=decimal)

    sub = command("oracle-lambda", cmd_oracle_lambda, "smallest positive integer of BFS length k")
    sub.add_argument("--set", type=descriptor, required=True)
    sub.add_argument("--k", type=decimal, required=True)
    sub.add_argument("--bound", type=decimal, required=True)
    sub.add_argument("--margin", type=decimal)

    sub = command("plength", cmd_plength, "upper bound for the length over all prime powers")
    sub.add_argument("n", type=decimal)
    sub.add_argument("--cap", type=decimal)
    sub.add_argument("--bound", type=decimal, help="prime-power bound for even n")

    sub = command("goldbach", cmd_goldbach, "Goldbach pair with the smallest first prime")
    sub.add_argument("n", type=decimal)

    sub = command("three-primes", cmd_three_primes, "three primes summing to an odd n > 5")
    sub.add_argument("n", type=decimal)

    sub = command("sieve3", cmd_sieve3, "odd integers with no length-2 witness within the two-power cap")
    sub.add_argument("--lo", type=decimal, required=True)
    sub.add_argument("--hi", type=decimal, required=True)
    sub.add_argument("--cap", type=decimal)
    sub.add_argument("--threads", type=decimal)
    sub.add_argument("--store", action="store_true", help="record the run in the database")

    sub = command("frontier", cmd_frontier, "odd integers covered by stored sieve runs")
    sub.add_argument("--cap", type=decimal)

    sub = command("runs", cmd_runs, "list stored sieve runs")
    sub.add_argument("--skip", type=decimal, default=0)
    sub.add_argument("--limit", type=decimal, default=100)

    command("sun-verify", cmd_sun_verify, "verify the example from Sun's residue class")

    sub = command("sun-member", cmd_sun_member, "membership in Sun's residue class")
    sub.add_argument("x", type=decimal)

    sub = command("fig2", cmd_fig2, "g-length of n for a range of bases")
    sub.add_argument("--n", type=decimal, default=20233509)
    sub.add_argument("--gmin", type=decimal, default=2)
    sub.add_argument("--gmax", type=decimal, default=100)
    sub.add_argument("--output")

    sub = command("fig3", cmd_fig3, "g-lengths up to nmax with the smallest-integer curve")
    sub.add_argument("--base", type=decimal, default=19)
    sub.add_argument("--nmax", type=decimal, default=10000)
    sub.add_argument("--output")

    sub = command("bfile", cmd_bfile, "OEIS b-file of smallest integers of each length")
    sub.add_argument("--base", type=decimal, required=True)
    sub.add_argument("--count", type=decimal, required=True)
    sub.add_argument("--output")

    sub = command("factor", cmd_factor, "prime factorization")
    sub.add_argument("n", type=decimal)

    sub = command("is-prime", cmd_is_prime, "primality verdict")
    sub.add_argument("n", type=decimal)

    sub = command("restricted", cmd_restricted, "length bound when some primes are removed")
    sub.add_argument("n", type=decimal)
    sub.add_argument("--exclude", type=decimal_list, default=[])
    sub.add_argument("--cap", type=decimal)

    return parser


def join_window_values(argv: List[str]) -> List[str]:
    """Rewrites ``--window lo:hi`` as ``--window=lo:hi`` so that a negative lo is not taken for an option."""
    joined = []
    tokens = iter(argv)
    for token in tokens:
        value = next(tokens, None) if token == "--window" else None
        joined.append(token if value is None else f"{token}={value}")
    return joined


def run(argv: Optional[List[str]] = None, settings: Optional[Settings] = None) -> int:
    """
    Runs one subcommand.

    Args:
        argv (List[str], optional): Arguments without the program name; defaults to sys.argv[1:].
        settings (Settings, optional): Configuration; defaults to the process settings.

    Returns:
        int: 0 on success, 1 for usage errors, 2 for computational failures.
    """

    try:
        settings = settings or get_settings()
        argv = sys.argv[1:] if argv is None else argv
        args = build_parser().parse_args(join_window_values(argv))
        output = args.handler(args, settings)
    except GadicError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(output)
    return 0


def main():
    try:
        level = get_settings().log_level.upper()
    except GadicError:
        level = "WARNING"
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    sys.exit(run())


if __name__ == "__main__":
    main()
