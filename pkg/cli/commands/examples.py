"""`corpus`: list and show the bundled examples."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from rich.table import Table

from corpus import list_examples, load_example
from serialization import to_document

from cli.render.algebra import render_algebra, render_matrix
from cli.session import EXIT_OK, Session


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("corpus", help="bundled examples with provenance notes")
    actions = parser.add_subparsers(dest="action", required=True)
    actions.add_parser("list", help="list bundled examples").set_defaults(func=run_list)
    show = actions.add_parser("show", help="show one example")
    show.add_argument("name")
    show.set_defaults(func=run_show)


def run_list(args: argparse.Namespace, session: Session) -> int:
    entries = list_examples()
    if session.as_json:
        session.emit_json([
            {"name": e.name, "kind": e.kind.value, "dim": e.dim, "provenance": e.provenance} for e in entries
        ])
        return EXIT_OK
    table = Table(title="Bundled examples", title_justify="left")
    table.add_column("Name", style="bold")
    table.add_column("Kind")
    table.add_column("Dim", justify="right")
    table.add_column("Provenance", overflow="fold")
    for e in entries:
        table.add_row(f"corpus:{e.name}", e.kind.value, str(e.dim), e.provenance)
    session.console.print(table)
    return EXIT_OK


def run_show(args: argparse.Namespace, session: Session) -> int:
    af = load_example(args.name)
    if session.as_json:
        session.emit_json(to_document(af))
        return EXIT_OK
    render_algebra(session.console, af.algebra)
    for label, table in (("map", af.maps), ("form", af.forms), ("tensor", af.tensors)):
        for name, value in table.items():
            render_matrix(session.console, value.entries, f"{label} {name}")
    session.console.print(f"[dim]{af.provenance}[/dim]")
    return EXIT_OK
