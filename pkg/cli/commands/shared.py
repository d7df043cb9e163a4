"""Argument helpers shared by the command modules."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from bimodules import (
    coadjoint,
    dual_bimodule,
    lquadri_bimodule,
    lquadri_prelie_bimodule,
    lquadri_representation,
    regular_bimodule,
)
from errors import FormatError
from models import Bimodule, LinearMap, MultiAlgebra, VerificationReport
from serialization import AlgebraFile, load_algebra_file, to_document, write_algebra_file

from cli.render.algebra import render_algebra
from cli.render.reports import render_report
from cli.session import Session

# Contexts derived from the input algebra itself; anything else is read as a file.
BUILTIN_CONTEXTS = {
    "regular": regular_bimodule,
    "coadjoint": coadjoint,
    "dual-regular": lambda alg: dual_bimodule(regular_bimodule(alg)),
    "horizontal": lambda alg: lquadri_bimodule(alg, "horizontal"),
    "vertical": lambda alg: lquadri_bimodule(alg, "vertical"),
    "depth": lambda alg: lquadri_bimodule(alg, "depth"),
    "dual-horizontal": lambda alg: dual_bimodule(lquadri_bimodule(alg, "horizontal")),
    "dual-vertical": lambda alg: dual_bimodule(lquadri_bimodule(alg, "vertical")),
    "dual-depth": lambda alg: dual_bimodule(lquadri_bimodule(alg, "depth")),
    "circ": lambda alg: lquadri_prelie_bimodule(alg, "circ"),
    "star": lambda alg: lquadri_prelie_bimodule(alg, "star"),
    "bullet": lambda alg: lquadri_prelie_bimodule(alg, "bullet"),
    "representation": lquadri_representation,
}


def add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="algebra file, or corpus:<name> for a bundled example")


def add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", default=None, help="write the resulting algebra file here")


def split_names(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def resolve_bimodule(target: str, af: AlgebraFile) -> Bimodule:
    """A builtin context name, or a file whose module block acts over the input algebra."""
    if target in BUILTIN_CONTEXTS:
        return BUILTIN_CONTEXTS[target](af.algebra)
    other = load_algebra_file(target)
    if other.module is None:
        raise FormatError(
            f"no module block (or use one of: {', '.join(BUILTIN_CONTEXTS)})", other.source
        )
    return other.module.over(af.algebra)


def resolve_map(name: str, *files: AlgebraFile) -> LinearMap:
    for af in files:
        if name in af.maps:
            return af.maps[name]
    return files[0].get_map(name)


def show_report(session: Session, report: VerificationReport) -> int:
    if session.as_json:
        session.emit_json(report.to_dict())
    else:
        render_report(session.console, report)
    return session.exit_code(report.holds)


def show_algebra(session: Session, af: AlgebraFile | MultiAlgebra, output: str | None) -> None:
    if isinstance(af, MultiAlgebra):
        af = AlgebraFile(af)
    if output:
        write_algebra_file(af, output)
    if session.as_json:
        session.emit_json(to_document(af))
    else:
        render_algebra(session.console, af.algebra)
        if output:
            session.console.print(f"[dim]Wrote {output}[/dim]")
