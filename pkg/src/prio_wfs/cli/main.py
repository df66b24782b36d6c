"""Main CLI entry point for prio-wfs."""

import shutil
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from .. import __version__
from ..core.config import Engine, OutputFormat, RunConfig, Semantics
from ..core.errors import ProgramError, TooLarge
from ..core.parser import load_program
from ..core.semantics import find_conflicts, seminormalize
from ..core.solver import SIDECAR_SUFFIX, Solver, list_fixtures
from ..utils.output import (
    create_program_table,
    export_report_json,
    print_fixture_summary,
    print_report,
    program_json,
    program_yaml,
    report_json,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_TOO_LARGE = 2
EXIT_INTERNAL = 3

console = Console()


@click.group()
@click.version_option(version=__version__, prog_name="prio-wfs")
def cli() -> None:
    """Well-founded semantics for prioritized extended logic programs."""
    pass


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "-s",
    "--semantics",
    type=click.Choice([s.value for s in Semantics]),
    help="Semantics to compute (default: wfs-pr)",
)
@click.option(
    "-e",
    "--engine",
    type=click.Choice([e.value for e in Engine]),
    help="wfs-pr engine (default: declarative)",
)
@click.option("--coherence", is_flag=True, help="Weak negation satisfied by derived strong negation")
@click.option("-t", "--trace", is_flag=True, help="Show every iteration step")
@click.option(
    "-f",
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    help="Output format",
)
@click.option("--max-atoms", type=click.IntRange(min=1), help="Answer-set enumeration guard (default: 20)")
@click.option("--seminormal", is_flag=True, help="Seminormalize rules in type-I conflicts")
@click.option(
    "--strict-names",
    type=click.Choice(["error", "warn"]),
    help="Named strict rules: fail or drop the name",
)
@click.option("-c", "--config", type=click.Path(exists=True, dir_okay=False), help="Run configuration (JSON or YAML)")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path), help="Write the JSON report to a file")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def solve(
    file: Path,
    semantics: Optional[str],
    engine: Optional[str],
    coherence: bool,
    trace: bool,
    output_format: Optional[str],
    max_atoms: Optional[int],
    seminormal: bool,
    strict_names: Optional[str],
    config: Optional[str],
    output: Optional[Path],
    verbose: bool,
) -> None:
    """Compute the conclusions of FILE under a semantics."""
    overrides: Dict[str, Any] = {
        "input": file,
        "semantics": semantics,
        "engine": engine,
        "coherence": coherence or None,
        "trace": trace or None,
        "format": output_format,
        "max_atoms": max_atoms,
        "seminormal": seminormal or None,
        "strict_names": strict_names,
        "output": output,
    }
    try:
        base = RunConfig.from_file(config) if config else RunConfig()
        run_config = base.merged(overrides)
    except (ValidationError, ValueError, FileNotFoundError) as e:
        console.print(f"[red]Invalid configuration: {escape(str(e))}[/red]")
        sys.exit(EXIT_ERROR)

    solver = Solver(run_config, verbose=verbose)
    try:
        report = solver.solve()
    except TooLarge as e:
        console.print(f"[red]{escape(str(e))}[/red]")
        sys.exit(EXIT_TOO_LARGE)
    except ProgramError as e:
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        sys.exit(EXIT_ERROR)

    if run_config.output:
        export_report_json(report, run_config.output)
    if run_config.format == OutputFormat.JSON:
        click.echo(report_json(report))
    else:
        print_report(console, report, show_trace=run_config.trace)
        if run_config.output:
            console.print(f"[green]✓ Report saved to {escape(str(run_config.output))}[/green]")
    if not report.ok:
        sys.exit(EXIT_INTERNAL)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(["table", "text", "json", "yaml"]),
    default="table",
    help="Output format",
)
@click.option("--seminormal", is_flag=True, help="Seminormalize rules in type-I conflicts")
@click.option("--strict-names", type=click.Choice(["error", "warn"]), default="error")
def parse(file: Path, output_format: str, seminormal: bool, strict_names: str) -> None:
    """Parse and ground FILE, then show the resulting rules."""
    try:
        program = load_program(file, strict_names=strict_names)
    except ProgramError as e:
        console.print(f"[red]Error parsing file: {escape(str(e))}[/red]")
        sys.exit(EXIT_ERROR)
    if seminormal:
        program = seminormalize(program)

    if output_format == "json":
        click.echo(program_json(program))
    elif output_format == "yaml":
        click.echo(program_yaml(program), nl=False)
    elif output_format == "text":
        click.echo(str(program))
    else:
        console.print(create_program_table(program))


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def conflicts(file: Path) -> None:
    """List type-I and direct type-II conflicts between rules of FILE."""
    try:
        program = load_program(file)
    except ProgramError as e:
        console.print(f"[red]Error parsing file: {escape(str(e))}[/red]")
        sys.exit(EXIT_ERROR)
    found = find_conflicts(program)
    if not found:
        console.print("[green]No conflicts[/green]")
        return
    for conflict in found:
        console.print(
            f"[yellow]type-{conflict.kind}[/yellow] "
            f"{escape(program.label(conflict.first))} / {escape(program.label(conflict.second))}"
        )


@cli.command()
@click.argument("directory", required=False, type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--max-atoms", type=click.IntRange(min=1), default=20, help="Answer-set enumeration guard")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def check(directory: Optional[Path], max_atoms: int, verbose: bool) -> None:
    """Check every fixture in DIRECTORY (default: the shipped corpus) against its expected results."""
    solver = Solver(RunConfig(max_atoms=max_atoms), verbose=verbose)
    try:
        results = solver.check_fixtures(directory)
    except FileNotFoundError as e:
        console.print(f"[red]{escape(str(e))}[/red]")
        sys.exit(EXIT_ERROR)
    print_fixture_summary(console, results)
    if not results or not all(r.passed for r in results):
        sys.exit(EXIT_ERROR)


@cli.command()
@click.option("--export", "export_dir", type=click.Path(file_okay=False, path_type=Path), help="Copy the corpus here")
def fixtures(export_dir: Optional[Path]) -> None:
    """List the shipped fixture corpus or export it."""
    files = list_fixtures()
    if export_dir is None:
        for program_file in files:
            console.print(f"[cyan]{program_file.stem}[/cyan] {escape(str(program_file))}")
        return
    export_dir.mkdir(parents=True, exist_ok=True)
    for program_file in files:
        shutil.copy(program_file, export_dir / program_file.name)
        sidecar = program_file.with_name(program_file.stem + SIDECAR_SUFFIX)
        shutil.copy(sidecar, export_dir / sidecar.name)
    console.print(f"[green]✓ Exported {len(files)} fixtures to {escape(str(export_dir))}[/green]")


if __name__ == "__main__":
    cli()
