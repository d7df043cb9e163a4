"""`search-rb`: exhaustive Rota-Baxter search over a finite entry set."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from constructions import commuting_families, search_rb, search_space_size
from models import format_value
from serialization import load_algebra_file

from cli.commands.shared import add_input, split_names
from cli.render.algebra import render_matrix
from cli.session import EXIT_OK, Session


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("search-rb", help="enumerate weight-zero Rota-Baxter operators")
    add_input(p)
    p.add_argument("--entries", default="-1,0,1",
                   help="comma-separated exact entries, e.g. --entries -1,0,1")
    p.add_argument("--cap", type=int, default=None, help="largest search space to enumerate (overrides LQ_SEARCH_CAP)")
    p.add_argument("--diagonal", action="store_true", help="only diagonal matrices")
    p.add_argument("--max", dest="max_results", type=int, default=None, help="stop after this many")
    p.add_argument("--families", type=int, default=None,
                   help="also count pairwise commuting families of this size")
    p.set_defaults(func=run)


def run(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    entries = split_names(args.entries)
    size = search_space_size(af.algebra.dim, entries, args.diagonal)
    found = search_rb(
        af.algebra,
        entries,
        max_results=args.max_results,
        diagonal=args.diagonal,
        cap=args.cap if args.cap is not None else session.config.search_cap,
        workers=session.workers_for(size),
    )
    families = commuting_families(found, args.families) if args.families else None
    if session.as_json:
        payload = {
            "subject": af.algebra.label,
            "candidates": size,
            "found": [[[str(v) for v in row] for row in R.entries] for R in found],
        }
        if families is not None:
            payload["families"] = len(families)
        session.emit_json(payload)
        return EXIT_OK
    session.console.print(
        f"[bold]{len(found)}[/bold] Rota-Baxter operators on {af.algebra.label} "
        f"among {size} candidates (entries {format_value(entries)})"
    )
    for i, R in enumerate(found, start=1):
        render_matrix(session.console, R.entries, f"R{i}")
    if families is not None:
        session.console.print(f"[bold]{len(families)}[/bold] commuting families of size {args.families}")
    return EXIT_OK
