"""`verify`: decide an algebra file against an axiom system."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from axioms import builtin_system, matching_kinds, verify, verify_kind
from bimodules import lquadri_equivalence
from errors import UnknownKindError
from models import Kind
from serialization import load_algebra_file

from cli.commands.shared import add_input, show_report
from cli.render.reports import render_conditions
from cli.session import Session


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="check an algebra against its axiom system")
    add_input(parser)
    parser.add_argument("--as", dest="kind", default=None, help="structure class to verify against")
    parser.add_argument("--all-kinds", action="store_true",
                        help="report every structure class with matching operation names")
    parser.add_argument("--equivalence", action="store_true",
                        help="for four operations: also decide the horizontal bimodule characterization")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    alg = af.algebra
    if args.kind:
        alg = alg.with_kind(Kind.parse(args.kind))
    work = alg.dim ** 3
    workers = session.workers_for(work)

    if args.equivalence:
        conditions = lquadri_equivalence(alg, workers)
        if session.as_json:
            session.emit_json({"subject": alg.label, "conditions": conditions})
        else:
            render_conditions(session.console, f"{alg.label}: L-quadri characterization", conditions)
        return session.exit_code(all(conditions.values()))

    if args.all_kinds or alg.kind is Kind.RAW:
        kinds = matching_kinds(alg)
        if not kinds:
            raise UnknownKindError(
                f"No structure class has operations {', '.join(alg.op_names) or 'none'}; pass --as KIND"
            )
        reports = {k.value: verify(alg, builtin_system(k), workers) for k in kinds}
        if session.as_json:
            session.emit_json({name: report.to_dict() for name, report in reports.items()})
        else:
            render_conditions(session.console, f"{alg.label}: matching structure classes",
                              {name: report.holds for name, report in reports.items()})
        if alg.kind is Kind.RAW:
            return session.exit_code(any(r.holds for r in reports.values()))
        return session.exit_code(reports[alg.kind.value].holds)

    return show_report(session, verify_kind(alg, workers))
