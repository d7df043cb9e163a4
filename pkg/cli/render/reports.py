"""Rich renderers for verification reports and boolean condition tables."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from rich.console import Console
from rich.table import Table
from rich.text import Text

from models import VerificationReport, format_value


def status_text(holds: bool) -> Text:
    return Text("holds", style="bold green") if holds else Text("fails", style="bold red")


def render_report(console: Console, report: VerificationReport) -> None:
    title = f"{report.subject}: {report.system}"
    table = Table(title=title, title_justify="left", show_lines=False)
    table.add_column("Check")
    table.add_column("Status")
    for check in report.checks:
        table.add_row(check, status_text(report.status_of(check)))
    console.print(table)
    if report.failures:
        witnesses = Table(title="Witnesses", title_justify="left")
        witnesses.add_column("Check")
        witnesses.add_column("At")
        witnesses.add_column("LHS", overflow="fold")
        witnesses.add_column("RHS", overflow="fold")
        for failure in report.failures:
            witnesses.add_row(failure.check, failure.witness, format_value(failure.lhs), format_value(failure.rhs))
        console.print(witnesses)
    for note in report.notes:
        console.print(f"[dim]{note}[/dim]")
    verdict = "[bold green]HOLDS[/bold green]" if report.holds else "[bold red]FAILS[/bold red]"
    console.print(f"{verdict}  [dim]({report.checked} evaluations)[/dim]")


def render_conditions(console: Console, title: str, conditions: dict[str, bool]) -> None:
    table = Table(title=title, title_justify="left")
    table.add_column("Condition")
    table.add_column("Status")
    for name, holds in conditions.items():
        table.add_row(name, status_text(holds))
    console.print(table)
