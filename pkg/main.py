import argparse
import sys
from pathlib import Path
from typing import List, Optional

from coxeter_descent.core.errors import (
    ClassificationMismatch,
    CoxeterError,
    EnumerationCapError,
    TransversalFactorizationError,
)
from coxeter_descent.suites.base_suite import SuiteError
from coxeter_descent.utils.config import load_settings
from coxeter_descent.utils.io_utils import write_output
from coxeter_descent.workflows.commands import (
    EXIT_CAP,
    EXIT_MISMATCH,
    EXIT_USAGE,
    CSV,
    FORMATS,
    JSON,
    cmd_analyze,
    cmd_group,
    cmd_product,
    cmd_reproduce,
    cmd_table,
    cmd_transversal,
)
from coxeter_descent.workflows.master_suite import TARGETS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="Enumeration cap (overrides COXETER_ENUMERATION_CAP)")
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format (default json; csv for table)")
    common.add_argument("--out", type=Path, default=None, help="Write output to this file (reproduce: a directory)")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized spot checks")

    parser = argparse.ArgumentParser(description="Finite Coxeter groups and Solomon's descent algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[common], help="Order, Coxeter matrix and generators of a type")
    p.add_argument("type", help="Type spec, e.g. A5, B3, D4, I2:7, H3, F4, E8")

    p = sub.add_parser("transversal", parents=[common], help="X_J, or X_JK when K is given, as reduced words")
    p.add_argument("type")
    p.add_argument("J", help="Subset, e.g. 1,3 or - for the empty set")
    p.add_argument("K", nargs="?", default=None)

    p = sub.add_parser("product", parents=[common], help="Solomon product x_J x_K")
    p.add_argument("type")
    p.add_argument("J")
    p.add_argument("K")

    p = sub.add_parser("analyze", parents=[common], help="Native-basis analysis of Q[x_J] for J = S minus {s}")
    p.add_argument("type")
    p.add_argument("s", type=int, help="1-based index of the removed generator")

    p = sub.add_parser("table", parents=[common], help="Chain structure constants of A_n, B_n or D_n")
    p.add_argument("type")
    p.add_argument("--brute-force", action="store_true", help="Compute cells by Solomon's rule")

    p = sub.add_parser("reproduce", parents=[common], help="Run a reproduction suite")
    p.add_argument("target", choices=TARGETS)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    if args.cap is not None and args.cap < 1:
        print("error: --cap must be positive", file=sys.stderr)
        return EXIT_USAGE

    out = args.out
    fmt = args.format or (CSV if args.command == "table" else JSON)
    try:
        settings = load_settings().with_overrides(enumeration_cap=args.cap, seed=args.seed)
        if args.command == "group":
            result = cmd_group(args.type, settings, fmt)
        elif args.command == "transversal":
            result = cmd_transversal(args.type, args.J, args.K, settings, fmt)
        elif args.command == "product":
            result = cmd_product(args.type, args.J, args.K, settings, fmt)
        elif args.command == "analyze":
            result = cmd_analyze(args.type, args.s, settings, fmt)
        elif args.command == "table":
            result = cmd_table(args.type, settings, args.brute_force, fmt)
        else:
            summary_dir = None
            if out is not None and (out.is_dir() or not out.suffix):
                summary_dir, out = out, None
            result = cmd_reproduce(args.target, settings, fmt, summary_dir)
    except EnumerationCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ClassificationMismatch, TransversalFactorizationError, SuiteError) as e:
        print(f"mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (CoxeterError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    write_output(result.text, out)
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
