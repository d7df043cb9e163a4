"""`check-r`, `check-form` and `check-map`: tensor equations, form conditions and operators."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from bimodules import check_o_operator, check_rota_baxter
from errors import AlgebraError
from models import Kind, MultiAlgebra, OOperator
from serialization import load_algebra_file
from yang_baxter import (
    NW_SIGN_PROOF,
    NW_SIGN_STATEMENT,
    check_cocycle_ldend,
    check_cocycle_lquadri,
    check_cybe,
    check_invariant_ldend_companions,
    check_invariant_lquadri,
    check_ld_equation,
    check_lq_equation,
    cybe_operator_bridge,
    extension_conditions,
    o_operator_equivalence_suite,
    tensor_form_bridge,
    transfer_under_symmetry,
)

from cli.commands.shared import BUILTIN_CONTEXTS, add_input, resolve_bimodule, resolve_map, show_report
from cli.render.reports import render_conditions
from cli.session import Session

EQUATIONS = {"cybe": check_cybe, "ld": check_ld_equation, "lq": check_lq_equation}
BRIDGES = {"suite", "bridge", "coadjoint"}
NW_SIGNS = {"statement": NW_SIGN_STATEMENT, "proof": NW_SIGN_PROOF}


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("check-r", help="decide a tensor equation for r in A (x) A")
    add_input(p)
    p.add_argument("--tensor", required=True, help="tensor name")
    p.add_argument("--equation", required=True, choices=sorted(EQUATIONS) + sorted(BRIDGES),
                   help="cybe, ld, lq; or suite / bridge / coadjoint for the equivalence checks")
    p.set_defaults(func=run_check_r)

    p = subparsers.add_parser("check-form", help="decide a bilinear-form condition")
    add_input(p)
    p.add_argument("--form", required=True, help="form name")
    p.add_argument("--condition", required=True,
                   choices=("cocycle", "invariant", "companions", "extension"))
    p.add_argument("--nw-sign", choices=sorted(NW_SIGNS), default="statement")
    p.add_argument("--across-symmetries", action="store_true",
                   help="repeat the invariant or cocycle check on the transpose and the four symmetries")
    p.set_defaults(func=run_check_form)

    p = subparsers.add_parser("check-map", help="decide the Rota-Baxter or O-operator condition")
    add_input(p)
    p.add_argument("--map", required=True, help="map name")
    p.add_argument("--bimodule", default=None,
                   help=f"file with a module block, or one of: {', '.join(BUILTIN_CONTEXTS)} "
                        "(default: Rota-Baxter on the algebra itself)")
    p.set_defaults(func=run_check_map)


def _conditions(session: Session, title: str, conditions: dict[str, bool]) -> None:
    if session.as_json:
        session.emit_json({"subject": title, "conditions": conditions})
    else:
        render_conditions(session.console, title, conditions)


def run_check_r(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    alg, r = af.algebra, af.get_tensor(args.tensor)
    workers = session.workers_for(alg.dim ** 3)
    if args.equation in EQUATIONS:
        return show_report(session, EQUATIONS[args.equation](alg, r, workers))
    if args.equation == "suite":
        conditions = o_operator_equivalence_suite(alg, r, workers).conditions
    elif args.equation == "bridge":
        conditions = tensor_form_bridge(alg, r, workers)
    else:
        conditions = cybe_operator_bridge(alg, r, workers)
    _conditions(session, f"{alg.label}: {args.equation} for {args.tensor}", conditions)
    return session.exit_code(all(conditions.values()))


def _is_lquadri(alg: MultiAlgebra) -> bool:
    return set(alg.op_names) == set(Kind.L_QUADRI.op_names)


def run_check_form(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    alg, B = af.algebra, af.get_form(args.form)
    nw_sign = NW_SIGNS[args.nw_sign]
    if args.across_symmetries:
        if args.condition not in ("invariant", "cocycle"):
            raise AlgebraError("--across-symmetries applies to the invariant and cocycle conditions")
        reports = transfer_under_symmetry(alg, B, args.condition)
        _conditions(session, f"{alg.label}: {args.condition} across reshufflings",
                    {name: report.holds for name, report in reports.items()})
        return session.exit_code(all(report.holds for report in reports.values()))
    if args.condition == "cocycle":
        report = check_cocycle_lquadri(alg, B) if _is_lquadri(alg) else check_cocycle_ldend(alg, B)
    elif args.condition == "invariant":
        report = check_invariant_lquadri(alg, B, nw_sign)
    elif args.condition == "companions":
        report = check_invariant_ldend_companions(alg, B)
    else:
        report = extension_conditions(alg, B)
    return show_report(session, report)


def run_check_map(args: argparse.Namespace, session: Session) -> int:
    af = load_algebra_file(args.file)
    if args.bimodule is None:
        return show_report(session, check_rota_baxter(af.algebra, af.get_map(args.map), session.workers))
    context = resolve_bimodule(args.bimodule, af)
    extra = [] if args.bimodule in BUILTIN_CONTEXTS else [load_algebra_file(args.bimodule)]
    T = resolve_map(args.map, *extra, af)
    return show_report(session, check_o_operator(OOperator(T, context), session.workers))
