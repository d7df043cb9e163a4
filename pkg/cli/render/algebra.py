"""Rich renderers for algebras, matrices and bundled examples."""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import numpy as np
from rich.console import Console
from rich.table import Table

from models import MultiAlgebra, op_symbol


def linear_combination(coeffs: np.ndarray, basis: str = "e") -> str:
    """'e1 - 2 e3' style rendering of a coefficient vector."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        name = f"{basis}{k + 1}"
        if c == 1:
            term = name
        elif c == -1:
            term = f"-{name}"
        else:
            term = f"{c} {name}" if c.denominator == 1 else f"({c}) {name}"
        parts.append(term)
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def render_algebra(console: Console, alg: MultiAlgebra, title: str | None = None) -> None:
    """Every nonzero product e_i op e_j, operations in canonical order."""
    table = Table(title=title or f"{alg.label} [{alg.kind.value}, dim {alg.dim}]", title_justify="left")
    table.add_column("Product")
    table.add_column("Value")
    rows = 0
    for name in alg.op_names:
        coeffs = alg.op(name).coeffs
        symbol = op_symbol(name)
        for i in range(alg.dim):
            for j in range(alg.dim):
                vector = coeffs[i, j]
                if any(v != 0 for v in vector):
                    table.add_row(f"e{i + 1} {symbol} e{j + 1}", linear_combination(vector))
                    rows += 1
    if rows == 0:
        table.add_row("[dim]all products vanish[/dim]", "0")
    console.print(table)


def render_matrix(console: Console, entries: np.ndarray, title: str) -> None:
    table = Table(title=title, title_justify="left", show_header=False)
    cols = entries.shape[1] if entries.ndim == 2 else 0
    for _ in range(cols):
        table.add_column(justify="right")
    for row in entries:
        table.add_row(*(str(Fraction(v)) for v in row))
    console.print(table)
