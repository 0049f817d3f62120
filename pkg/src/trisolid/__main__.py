"""
trisolid.__main__ - CLI entry point for the classification checks.

Usage:
    python -m trisolid table1                       # The twelve cases over P^2
    python -m trisolid verify all                   # Every verifier, in order
    python -m trisolid verify reider --window 5     # One verifier
    python -m trisolid verify --list                # Registered ids
    python -m trisolid invariants --b 10 --c 21     # Invariants of S
    python -m trisolid bounds --b 10 --s 13         # Cusp bounds
    python -m trisolid report --format md           # Table and all verdicts

Exit status: 0 when every verdict passes, 1 on a discrepancy, 2 on a usage
or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from trisolid.classify import (
    VerificationContext,
    describe_verifier,
    enumerate_table1,
    filter_table1,
    list_verifiers,
    run_all,
    run_verifier,
)
from trisolid.config import (
    DEFAULT_WINDOW,
    FORMAT_ENV_VAR,
    OutputFormat,
    RunConfig,
    default_format,
)
from trisolid.errors import TrisolidError, UnknownVerifierError
from trisolid.report import (
    render_bounds,
    render_full,
    render_invariants,
    render_reports,
    render_table,
    render_verifier_list,
)
from trisolid.tripleplane import (
    branch_invariants,
    cusp_bounds,
    decomposable_invariants,
    from_tschirnhaus,
)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(name)s:%(levelname)s:%(message)s"

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser with subcommands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help=f"Output format (default: text, or ${FORMAT_ENV_VAR})",
    )
    common.add_argument(
        "-o",
        "--output",
        metavar="FILE",
        help="Write the report to FILE instead of stdout",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log debug output to stderr",
    )

    parser = argparse.ArgumentParser(
        prog="trisolid",
        description="Exact checks for triple solids with a scroll structure",
    )
    parser.add_argument(
        "--version",
        action="store_true",
        help="Print version and exit",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    subparsers.add_parser(
        "table1",
        parents=[common],
        help="Enumerate the cases over P^2 with filter annotations",
    )

    verify_parser = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Run a verifier by id, or all of them",
    )
    verify_parser.add_argument(
        "target",
        nargs="?",
        help="Verifier id or 'all'",
    )
    verify_parser.add_argument(
        "--list",
        action="store_true",
        help="List verifier ids in run order",
    )
    verify_parser.add_argument(
        "--window",
        type=int,
        default=DEFAULT_WINDOW,
        help=f"Search window for the Reider obstruction (default: {DEFAULT_WINDOW})",
    )

    invariants_parser = subparsers.add_parser(
        "invariants",
        parents=[common],
        help="Invariants of a general triple plane",
    )
    for flag, text in (
        ("--b1", "c1 of the Tschirnhaus bundle"),
        ("--b2", "c2 of the Tschirnhaus bundle"),
        ("--b", "branch curve degree"),
        ("--c", "number of cusps"),
        ("--m", "T = O(-m) + O(-n)"),
        ("--n", "T = O(-m) + O(-n)"),
    ):
        invariants_parser.add_argument(flag, type=int, help=text)

    bounds_parser = subparsers.add_parser(
        "bounds",
        parents=[common],
        help="Admissible cusp counts for (b, s)",
    )
    bounds_parser.add_argument("--b", type=int, required=True, help="branch degree")
    bounds_parser.add_argument("--s", type=int, required=True, help="c2(E)")
    bounds_parser.add_argument("--c", type=int, help="also test this cusp count")
    bounds_parser.add_argument(
        "--rational-non-p2",
        action="store_true",
        help="S is rational with minimal model other than P^2",
    )

    report_parser = subparsers.add_parser(
        "report",
        parents=[common],
        help="The enumeration over P^2 and every verdict",
    )
    report_parser.add_argument("--window", type=int, default=DEFAULT_WINDOW)

    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def build_config(args: argparse.Namespace) -> RunConfig:
    """RunConfig from parsed arguments; an explicit --format beats the env var."""
    fmt = OutputFormat(args.format) if args.format else default_format()
    params = {
        name: getattr(args, name, None)
        for name in ("b1", "b2", "b", "c", "m", "n", "s")
    }
    target = getattr(args, "target", None)
    if getattr(args, "list", False):
        target = None
    return RunConfig(
        command=args.command,
        target=target,
        format=fmt,
        window=getattr(args, "window", DEFAULT_WINDOW),
        output=Path(args.output) if args.output else None,
        params=params,
        rational_non_p2=getattr(args, "rational_non_p2", False),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.version:
        from trisolid import __version__

        print(f"trisolid {__version__}")
        return EXIT_OK

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    configure_logging(args.verbose)
    try:
        config = build_config(args)
        if args.command == "verify" and args.list:
            return cmd_list(config)
        return run(config)
    except UnknownVerifierError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TrisolidError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"Error: cannot write output: {e}", file=sys.stderr)
        return EXIT_USAGE


def run(config: RunConfig) -> int:
    """Execute one command and emit its report."""
    if config.command == "table1":
        table = filter_table1(enumerate_table1())
        return emit(config, render_table(table, config.format))
    if config.command == "verify":
        return cmd_verify(config)
    if config.command == "invariants":
        return cmd_invariants(config)
    if config.command == "bounds":
        return cmd_bounds(config)
    if config.command == "report":
        reports = run_all(VerificationContext(window=config.window))
        table = filter_table1(enumerate_table1())
        status = EXIT_OK if all(r.overall for r in reports) else EXIT_DISCREPANCY
        emit(config, render_full(table, reports, config.format))
        return status
    print(f"Error: unknown command {config.command}", file=sys.stderr)
    return EXIT_USAGE


def emit(config: RunConfig, text: str) -> int:
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info("wrote %s", config.output)
    return EXIT_OK


def cmd_list(config: RunConfig) -> int:
    entries = [(name, describe_verifier(name)) for name in list_verifiers()]
    return emit(config, render_verifier_list(entries, config.format))


def cmd_verify(config: RunConfig) -> int:
    if not config.target:
        print("Error: verify needs a verifier id or 'all'", file=sys.stderr)
        return EXIT_USAGE
    ctx = VerificationContext(window=config.window)
    if config.target == "all":
        reports = run_all(ctx)
    else:
        reports = [run_verifier(config.target, ctx)]
    emit(config, render_reports(reports, config.format))
    return EXIT_OK if all(r.overall for r in reports) else EXIT_DISCREPANCY


def cmd_invariants(config: RunConfig) -> int:
    p = config.params
    given = {k for k in ("b1", "b2", "b", "c", "m", "n") if p.get(k) is not None}
    if given == {"b1", "b2"}:
        data = from_tschirnhaus(p["b1"], p["b2"])
    elif given == {"b", "c"}:
        data = branch_invariants(p["b"], p["c"])
    elif given == {"m", "n"}:
        data = decomposable_invariants(p["m"], p["n"])
    else:
        print(
            "Error: invariants needs exactly one of --b1/--b2, --b/--c, --m/--n",
            file=sys.stderr,
        )
        return EXIT_USAGE
    return emit(config, render_invariants(data, config.format))


def cmd_bounds(config: RunConfig) -> int:
    p = config.params
    bounds = cusp_bounds(p["b"], p["s"], rational_non_p2=config.rational_non_p2)
    return emit(config, render_bounds(bounds, config.format, c=p.get("c")))


if __name__ == "__main__":
    sys.exit(main())
