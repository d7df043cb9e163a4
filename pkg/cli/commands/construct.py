"""`construct`: build new algebras from operators, forms and bimodules."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from bimodules import induce, induce_on_image, rb_tower
from constructions import lift_via_cocycle, rb_closed_forms, symmetry_variants_of_rb_lquadri
from models import OOperator
from serialization import AlgebraFile, load_algebra_file
from yang_baxter import NW_SIGN_PROOF, NW_SIGN_STATEMENT, canonical_r, central_extension

from cli.commands.shared import (
    BUILTIN_CONTEXTS,
    add_input,
    add_output,
    resolve_bimodule,
    resolve_map,
    show_algebra,
    show_report,
    split_names,
)
from cli.render.algebra import render_algebra, render_matrix
from cli.render.reports import render_conditions
from cli.session import EXIT_OK, Session

NW_SIGNS = {"statement": NW_SIGN_STATEMENT, "proof": NW_SIGN_PROOF}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("construct", help="build algebras from operators, forms and bimodules")
    constructions = parser.add_subparsers(dest="construction", required=True)

    p = constructions.add_parser("rb-tower", help="lift through commuting Rota-Baxter operators")
    add_input(p)
    p.add_argument("--maps", required=True, help="comma-separated map names, applied first to last")
    add_output(p)
    p.set_defaults(func=run_rb_tower)

    p = constructions.add_parser("rb-variants", help="transpose and symmetries of the lift of an L-dendriform algebra")
    add_input(p)
    p.add_argument("--map", required=True, help="Rota-Baxter map name")
    p.set_defaults(func=run_rb_variants)

    p = constructions.add_parser("induce", help="structure induced by an O-operator")
    add_input(p)
    p.add_argument("--bimodule", required=True,
                   help=f"file with a module block, or one of: {', '.join(BUILTIN_CONTEXTS)}")
    p.add_argument("--map", required=True, help="name of T: V -> A")
    p.add_argument("--image", action="store_true", help="transport the structure to T(V)")
    p.add_argument("--force", action="store_true", help="skip the O-operator check")
    add_output(p)
    p.set_defaults(func=run_induce)

    p = constructions.add_parser("cocycle-lift", help="L-quadri-algebra from a nondegenerate 2-cocycle")
    add_input(p)
    p.add_argument("--form", required=True, help="form name")
    p.add_argument("--nw-sign", choices=sorted(NW_SIGNS), default="statement",
                   help="sign convention of the nw relation")
    add_output(p)
    p.set_defaults(func=run_cocycle_lift)

    p = constructions.add_parser("central-ext", help="central extension of an L-quadri-algebra by a form")
    add_input(p)
    p.add_argument("--form", required=True, help="form name")
    add_output(p)
    p.set_defaults(func=run_central_ext)

    p = constructions.add_parser("canonical-r", help="semidirect products over the dual and the canonical r")
    add_input(p)
    p.add_argument("--flavor", choices=("horizontal", "vertical", "depth"), default="horizontal",
                   help="ambient written with -o")
    add_output(p)
    p.set_defaults(func=run_canonical_r)


def run_rb_tower(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    maps = [af.get_map(name) for name in split_names(args.maps)]
    result = rb_tower(af.algebra, maps, session.workers)
    show_algebra(session, AlgebraFile(result, provenance=f"rb_tower of {af.algebra.label} through {args.maps}"),
                 args.output)
    return EXIT_OK


def run_rb_variants(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    R = af.get_map(args.map)
    via_functors = symmetry_variants_of_rb_lquadri(af.algebra, R)
    closed = rb_closed_forms(af.algebra, R)
    agreement = {name: alg.same_ops(closed[name]) for name, alg in via_functors.items()}
    if session.as_json:
        session.emit_json({"agree": agreement})
    else:
        for name, alg in via_functors.items():
            render_algebra(session.console, alg, title=name)
        render_conditions(session.console, "Closed forms match the reshuffled lift", agreement)
    return session.exit_code(all(agreement.values()))


def run_induce(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    context = resolve_bimodule(args.bimodule, af)
    extra = [] if args.bimodule in BUILTIN_CONTEXTS else [load_algebra_file(args.bimodule)]
    T = resolve_map(args.map, *extra, af)
    op = OOperator(T, context)
    if args.image:
        image = induce_on_image(op, force=args.force)
        show_algebra(session, image.algebra, args.output)
        if not session.as_json:
            render_matrix(session.console, image.inclusion.entries, "Basis of T(V) in A (columns)")
        return EXIT_OK
    show_algebra(session, induce(op, force=args.force), args.output)
    return EXIT_OK


def run_cocycle_lift(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    lift = lift_via_cocycle(af.algebra, af.get_form(args.form), NW_SIGNS[args.nw_sign])
    show_algebra(session, AlgebraFile(lift.lquadri, provenance=f"cocycle lift of {af.algebra.label} by {args.form}"),
                 args.output)
    if not session.as_json:
        render_algebra(session.console, lift.vertical, title="vertical companion")
        render_algebra(session.console, lift.depth, title="depth companion")
    return EXIT_OK


def run_central_ext(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    result = central_extension(af.algebra, af.get_form(args.form), session.workers)
    if args.output:
        show_algebra(session, result.algebra, args.output)
    if session.as_json:
        session.emit_json({
            "l-quadri": result.lquadri.to_dict(),
            "conditions": result.conditions.to_dict(),
            "omega": {flavor: report.to_dict() for flavor, report in result.omega.items()},
        })
    else:
        show_report(session, result.lquadri)
        show_report(session, result.conditions)
        for report in result.omega.values():
            show_report(session, report)
    return session.exit_code(result.lquadri.holds)


def run_canonical_r(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    solution = canonical_r(af.algebra, session.workers)
    ambient = solution.ambients[args.flavor]
    out = AlgebraFile(
        ambient,
        forms={"B": solution.form},
        tensors={"r": solution.r},
        provenance=f"{args.flavor} semidirect product of {af.algebra.label} with its dual; "
                   "r is the canonical skew tensor and B its induced form",
    )
    show_algebra(session, out, args.output)
    if not session.as_json:
        render_matrix(session.console, solution.r.entries, "r")
    return EXIT_OK
