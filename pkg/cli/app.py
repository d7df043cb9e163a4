"""Command-line entry: argument parsing, logging setup and exit-code mapping."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from rich.console import Console
from rich.logging import RichHandler

from config import AppConfig
from errors import AlgebraError, FormatError

from cli.commands import check, construct, derive, examples, search, verify
from cli.session import EXIT_USAGE, Session

logger = logging.getLogger(__name__)

COMMAND_MODULES = (verify, derive, construct, check, search, examples)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lquadri",
        description="Exact verification and construction of Lie, pre-Lie, dendriform, quadri and octo algebras.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--workers", type=int, default=None,
                        help="worker threads (overrides LQ_WORKERS); threads share the GIL, so exact "
                             "Fraction arithmetic does not run faster with more of them")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of tables")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def setup_logging(level: int) -> None:
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=False)
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", handlers=[handler], force=True)


def _join_entries(argv: list[str]) -> list[str]:
    """`--entries -1,0,1` would read the list as an option; rewrite it as `--entries=-1,0,1`."""
    joined: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--entries":
            value = next(tokens, None)
            joined.append(token if value is None else f"--entries={value}")
        else:
            joined.append(token)
    return joined


def run(argv: list[str] | None = None, config: AppConfig | None = None, console: Console | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_entries(sys.argv[1:] if argv is None else argv))
    config = config or AppConfig()
    setup_logging(logging.DEBUG if args.verbose else config.logging_level)
    if args.workers is not None and args.workers < 1:
        parser.error("--workers must be at least 1")
    session = Session(
        config=config,
        console=console or Console(),
        workers=args.workers or config.workers,
        as_json=args.json,
    )
    try:
        return args.func(args, session)
    except FormatError as e:
        prefix = f"{e.source}: " if e.source else ""
        for message in e.errors:
            session.err_console.print(f"[red]Format error:[/red] {prefix}{message}", highlight=False)
        return EXIT_USAGE
    except AlgebraError as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        session.err_console.print(f"[red]Error:[/red] {e}", highlight=False)
        return EXIT_USAGE
