"""`derive`: apply a named functor to an algebra file."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from rich.table import Table

from functors import apply_functor, check_derived_identities, functor, functor_aliases, functor_names
from serialization import AlgebraFile, load_algebra_file

from cli.commands.shared import add_input, add_output, show_algebra, show_report
from cli.session import EXIT_OK, EXIT_USAGE, Session


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("derive", help="apply a derived-structure functor")
    parser.add_argument("file", nargs="?", help="algebra file, or corpus:<name> for a bundled example")
    parser.add_argument("--functor", default=None, help="functor name (see --list)")
    parser.add_argument("--list", action="store_true", help="print the functor table")
    parser.add_argument("--check-identities", action="store_true",
                        help="also check the derived-operation identities of a reshuffling")
    add_output(parser)
    parser.set_defaults(func=run)


def _list(session: Session) -> int:
    aliases = functor_aliases()
    rows = []
    for name in functor_names(include_aliases=True):
        recipe = functor(name)
        source = recipe.source.value
        target = recipe.target.value
        if recipe.strong_target:
            target += f" ({recipe.strong_target.value} from strong input)"
        rows.append((name, source, target, aliases.get(name, "")))
    if session.as_json:
        session.emit_json([
            {"name": n, "source": s, "target": t, "alias_of": a} for n, s, t, a in rows
        ])
        return EXIT_OK
    table = Table(title="Functors", title_justify="left")
    for column in ("Name", "Source", "Target", "Alias of"):
        table.add_column(column)
    for row in rows:
        table.add_row(*row)
    session.console.print(table)
    return EXIT_OK


def run(args: argparse.Namespace, session: Session) -> int:
    if args.list:
        return _list(session)
    if not args.file or not args.functor:
        session.err_console.print("[red]Error:[/red] derive needs a file and --functor (or --list)")
        return EXIT_USAGE
    af = load_algebra_file(args.file)
    derived = apply_functor(args.functor, af.algebra)
    show_algebra(session, AlgebraFile(derived, provenance=f"{args.functor} of {af.algebra.label}"), args.output)
    if args.check_identities:
        return show_report(session, check_derived_identities(af.algebra, functor(args.functor).name))
    return EXIT_OK
