import json
from pathlib import Path
from typing import List, Sequence

import yaml
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ..core.models import FixtureResult, SolveReport
from ..core.program import PrioritizedProgram, format_rule


def render_set(literals: Sequence[str], inconsistent: bool = False) -> str:
    if inconsistent:
        return "Lit"
    if not literals:
        return "∅"
    return "{" + ", ".join(literals) + "}"


def create_trace_table(report: SolveReport) -> Table:
    table = Table(title=f"{report.semantics} iteration")
    table.add_column("Step", style="cyan", justify="right")
    table.add_column("Conclusions", style="green")
    table.add_column("Newly safe rules", style="magenta")
    for step in report.trace:
        table.add_row(
            f"S{step.step}",
            escape(render_set(step.conclusions)),
            escape(", ".join(step.new_safe_rules) or "-"),
        )
    return table


def create_answer_set_table(report: SolveReport) -> Table:
    table = Table(title="Answer sets")
    table.add_column("#", style="cyan", justify="right")
    table.add_column("Answer set", style="green")
    table.add_column("Priority preserving", justify="center")
    table.add_column("Rebutted", style="yellow")
    preserving = {tuple(a) for a in report.priority_preserving}
    for index, answer_set in enumerate(report.answer_sets, start=1):
        rendered = render_set(answer_set)
        table.add_row(
            str(index),
            escape(rendered),
            "[green]yes[/green]" if tuple(answer_set) in preserving else "[red]no[/red]",
            escape(", ".join(report.rebutted.get(rendered, [])) or "-"),
        )
    return table


def create_comparison_table(report: SolveReport) -> Table:
    table = Table(title="Semantics comparison")
    table.add_column("Semantics", style="cyan", no_wrap=True)
    table.add_column("Conclusions", style="green")
    for semantics, literals in report.comparison.items():
        table.add_row(semantics, escape(render_set(literals)))
    return table


def create_program_table(program: PrioritizedProgram) -> Table:
    table = Table(title=f"Program ({len(program)} rules)")
    table.add_column("Name", style="cyan", no_wrap=True)
    table.add_column("Rule", style="green")
    table.add_column("Kind", style="magenta")
    for rule in program.rules:
        table.add_row(
            str(rule.name) if rule.name is not None else "",
            escape(format_rule(rule)),
            "strict" if rule.is_strict else "defeasible",
        )
    return table


def print_report(console: Console, report: SolveReport, show_trace: bool = False) -> None:
    if report.answer_sets or report.semantics in ("answer", "pp-answer"):
        if not report.answer_sets:
            console.print("[yellow]No answer sets[/yellow]")
        else:
            console.print(create_answer_set_table(report))
    if report.comparison:
        console.print(create_comparison_table(report))
        for check in report.inclusions:
            mark = "[green]✓[/green]" if check.holds else "[red]✗ violated[/red]"
            console.print(f"{mark} {check.smaller} ⊆ {check.larger}")
        if report.engines_agree is not None:
            mark = "[green]✓[/green]" if report.engines_agree else "[red]✗[/red]"
            console.print(f"{mark} declarative and incremental wfs-pr agree")
    if show_trace and report.trace:
        console.print(create_trace_table(report))
    rendered = render_set(report.conclusions, report.inconsistent)
    if report.inconsistent:
        count = "Lit"
    else:
        count = str(len(report.conclusions)) if report.conclusions else "∅"
    console.print(f"[bold]{report.semantics}[/bold]: {escape(rendered)}")
    console.print(f"[blue]{count} conclusions[/blue]")


def report_json(report: SolveReport) -> str:
    return report.model_dump_json(indent=2, exclude={"timestamp"})


def export_report_json(report: SolveReport, output_file: Path) -> None:
    with open(output_file, "w", encoding="utf-8") as f:
        f.write(report_json(report))


def program_data(program: PrioritizedProgram) -> dict:
    return {
        "rules": [
            {
                "name": str(rule.name) if rule.name is not None else None,
                "head": str(rule.head),
                "positive": sorted(str(lit) for lit in rule.pos_body),
                "negative": sorted(str(lit) for lit in rule.weak_body),
            }
            for rule in program.rules
        ],
        "names": sorted(str(name) for name in program.names),
    }


def program_json(program: PrioritizedProgram) -> str:
    return json.dumps(program_data(program), indent=2, ensure_ascii=False)


def program_yaml(program: PrioritizedProgram) -> str:
    return yaml.safe_dump(program_data(program), default_flow_style=False, allow_unicode=True, sort_keys=False)


def print_fixture_summary(console: Console, results: List[FixtureResult]) -> None:
    if not results:
        console.print("[red]No fixtures to check[/red]")
        return
    table = Table(title="Fixture check")
    table.add_column("Fixture", style="cyan", no_wrap=True)
    table.add_column("Checks", justify="right")
    table.add_column("Result", justify="center")
    table.add_column("Mismatches", style="red")
    for result in results:
        table.add_row(
            result.name,
            str(result.checks),
            "[green]pass[/green]" if result.passed else "[red]fail[/red]",
            escape("\n".join(result.mismatches)),
        )
    console.print(table)
    passed = sum(1 for r in results if r.passed)
    colour = "green" if passed == len(results) else "red"
    console.print(f"[{colour}]{passed}/{len(results)} fixtures passed[/{colour}]")
