"""
Main entry point for the forcing-lab command line
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from libs.core.config import get_settings  # noqa: E402
from libs.core.logging import get_logger, setup_logging  # noqa: E402

logger = get_logger(__name__)

PARAMETER_NAMES = ["Z", "Z+", "P", "T", "cc"]


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="forcing-lab",
        description="Zero forcing, PSD forcing and induced path/tree cover laboratory",
    )
    parser.add_argument("--format", choices=["json", "text"], default="json", dest="fmt")
    parser.add_argument("--log-level", default=None, help="overrides FORCING_LAB_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="exact parameters of one graph")
    compute.add_argument("source", help="graph6 or edge-list file, '-' for stdin, or inline graph6")
    compute.add_argument(
        "-p", "--parameters", nargs="+", default=["Z", "Z+", "P", "T"], choices=PARAMETER_NAMES
    )
    compute.add_argument("--budget", type=int, default=None, help="search node limit")
    compute.add_argument("--dot", default=None, help="write a DOT drawing to this path")

    verify = sub.add_parser("verify", help="run a property suite on seeded instances")
    verify.add_argument("suite")
    verify.add_argument("--seed", type=int, default=settings.default_seed)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--budget", type=int, default=None)

    search = sub.add_parser("search", help="measure Z and P on vertex sums of Z = P graphs")
    search.add_argument("--seed", type=int, default=settings.default_seed)
    search.add_argument("--trials", type=int, default=10)
    search.add_argument("--max-n", type=int, default=7, help="vertices per side")
    search.add_argument("--budget", type=int, default=settings.search_node_limit)
    search.add_argument(
        "--sources", nargs="+", default=None, choices=["trees", "block_cycle", "k4e"]
    )

    gen = sub.add_parser("gen", help="build a graph from a GenSpec JSON object")
    gen.add_argument("spec", help='e.g. {"family": "grid", "m": 3, "n": 4}')
    gen.add_argument("--dot", default=None)
    return parser


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return source


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    from .commands import EXIT_USAGE, cmd_compute, cmd_gen, cmd_search, cmd_verify

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    setup_logging("harness", args.log_level)
    logger.debug("command_started", command=args.command)

    if args.command == "compute":
        try:
            text = _read_source(args.source)
        except OSError as e:
            logger.error("unreadable_input", error=str(e))
            return EXIT_USAGE
        return cmd_compute(text, args.parameters, args.budget, args.dot, args.fmt)
    if args.command == "verify":
        return cmd_verify(args.suite, args.seed, args.trials, args.max_n, args.budget, args.fmt)
    if args.command == "search":
        return cmd_search(
            args.seed, args.max_n, args.budget, args.trials, args.sources, args.fmt
        )
    return cmd_gen(args.spec, args.dot)


if __name__ == "__main__":
    sys.exit(main())
