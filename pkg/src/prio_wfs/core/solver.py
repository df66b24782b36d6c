import logging
import random
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Set, Union

from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn

from .answerset import analyse
from .config import Engine, Expectation, FixtureSpec, RunConfig, Semantics
from .errors import ProgramError
from .models import FixtureResult, InclusionCheck, SolveReport, TraceStepReport
from .parser import load_program, parse_literal
from .program import Literal, LiteralSet, PrioritizedProgram
from .semantics import SemanticsTrace, seminormalize, wfs, wfs_pr, wfs_star

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"
SIDECAR_SUFFIX = ".expected.yaml"


def _report_trace(program: PrioritizedProgram, trace: SemanticsTrace) -> List[TraceStepReport]:
    return [
        TraceStepReport(
            step=index,
            conclusions=step.conclusions.rendered(),
            new_safe_rules=[program.label(r) for r in step.new_safe_rules],
        )
        for index, step in enumerate(trace.steps, start=1)
    ]


def _literal_set(texts: Iterable[str]) -> Set[Literal]:
    return {parse_literal(text) for text in texts}


class Solver:
    def __init__(
        self, config: RunConfig, console: Optional[Console] = None, verbose: bool = False
    ):
        self.config = config
        self.console = console or Console(stderr=True)
        self.logger = self._setup_logging(logging.DEBUG if verbose else logging.INFO)

    def _setup_logging(self, level: int) -> logging.Logger:
        logging.basicConfig(
            level=level,
            format="%(message)s",
            datefmt="[%X]",
            handlers=[RichHandler(console=self.console, rich_tracebacks=True, markup=False)],
        )
        # basicConfig is a no-op once the root logger has handlers
        logging.getLogger().setLevel(level)
        return logging.getLogger(__name__)

    def load_program(self, path: Optional[Union[str, Path]] = None) -> PrioritizedProgram:
        path = path or self.config.input
        if path is None:
            raise ValueError("No program file given")
        program = load_program(Path(path), strict_names=self.config.strict_names)
        self.logger.info(
            f"Loaded {len(program)} rules ({len(program.named_rules)} named, "
            f"{len(program.names)} names)"
        )
        if self.config.seminormal:
            program = seminormalize(program)
            self.logger.info("Rules in type-I conflicts replaced by their seminormal form")
        return program

    def run_semantics(
        self,
        program: PrioritizedProgram,
        semantics: Semantics,
        engine: Engine = Engine.DECLARATIVE,
        coherence: bool = False,
        rng: Optional[random.Random] = None,
    ) -> SemanticsTrace:
        if semantics == Semantics.WFS:
            return wfs(program)
        if semantics == Semantics.WFS_STAR:
            return wfs_star(program)
        if semantics == Semantics.WFS_PR:
            return wfs_pr(program, engine=engine.value, coherence=coherence, rng=rng)
        raise ValueError(f"{semantics.value} is not a fixpoint semantics")

    def solve(self, program: Optional[PrioritizedProgram] = None) -> SolveReport:
        """Compute the configured semantics and build a report.

        Raises:
            ProgramError: the program does not parse or ground.
            TooLarge: answer-set enumeration is over the configured guard.
        """
        if program is None:
            program = self.load_program()
        semantics = self.config.semantics
        name = str(self.config.input) if self.config.input else None
        self.logger.info(f"Computing {semantics.value}")

        if semantics == Semantics.DIFF:
            report = self.diff(program)
            report.program = name
            return report

        if semantics in (Semantics.ANSWER, Semantics.PP_ANSWER):
            analysis = analyse(program, self.config.max_atoms)
            chosen = (
                analysis.answer_sets
                if semantics == Semantics.ANSWER
                else analysis.pp_answer_sets
            )
            skeptical = analysis.skeptical if semantics == Semantics.ANSWER else analysis.skeptical_pp
            return SolveReport(
                semantics=semantics.value,
                program=name,
                conclusions=skeptical.rendered(),
                inconsistent=skeptical.is_lit,
                answer_sets=[a.rendered() for a in chosen],
                priority_preserving=[a.rendered() for a in analysis.pp_answer_sets],
                rebutted={
                    str(a): [program.label(r) for r in rules]
                    for a, rules in analysis.rebutted.items()
                    if a in chosen
                },
            )

        trace = self.run_semantics(program, semantics, self.config.engine, self.config.coherence)
        final = trace.final
        if final.is_lit:
            self.logger.warning(f"{semantics.value} conclusions are inconsistent")
        return SolveReport(
            semantics=semantics.value,
            program=name,
            conclusions=final.rendered(),
            inconsistent=final.is_lit,
            trace=_report_trace(program, trace) if self.config.trace else [],
        )

    def diff(self, program: PrioritizedProgram) -> SolveReport:
        coherence = self.config.coherence
        results: Dict[str, LiteralSet] = {
            "wfs": wfs(program).final,
            "wfs-star": wfs_star(program).final,
            "wfs-pr": wfs_pr(program, engine="declarative", coherence=coherence).final,
        }
        incremental = wfs_pr(program, engine="incremental", coherence=coherence).final
        inclusions = [
            self._inclusion("wfs", "wfs-star", results),
            self._inclusion("wfs-star", "wfs-pr", results),
        ]
        engines_agree = incremental == results["wfs-pr"]
        for check in inclusions:
            if not check.holds:
                self.logger.error(
                    f"Inclusion {check.smaller} <= {check.larger} violated: {check.missing}"
                )
        if not engines_agree:
            self.logger.error(
                f"wfs-pr engines disagree: declarative {results['wfs-pr']}, incremental {incremental}"
            )
        return SolveReport(
            semantics=Semantics.DIFF.value,
            conclusions=results["wfs-pr"].rendered(),
            inconsistent=results["wfs-pr"].is_lit,
            comparison={key: value.rendered() for key, value in results.items()},
            inclusions=inclusions,
            engines_agree=engines_agree,
        )

    @staticmethod
    def _inclusion(smaller: str, larger: str, results: Dict[str, LiteralSet]) -> InclusionCheck:
        missing = sorted(str(lit) for lit in results[smaller] if lit not in results[larger])
        return InclusionCheck(smaller=smaller, larger=larger, holds=not missing, missing=missing)

    def check_expectation(
        self, program: PrioritizedProgram, expectation: Expectation
    ) -> Optional[str]:
        semantics = expectation.semantics
        if semantics in (Semantics.ANSWER, Semantics.PP_ANSWER):
            analysis = analyse(program, self.config.max_atoms)
            found = analysis.answer_sets if semantics == Semantics.ANSWER else analysis.pp_answer_sets
            actual = {frozenset(a.members) for a in found}
            wanted = {frozenset(_literal_set(a)) for a in expectation.answer_sets or []}
            if actual != wanted:
                return f"{expectation.label}: expected {self._show_family(wanted)}, got {self._show_family(actual)}"
            return None
        trace = self.run_semantics(program, semantics, expectation.engine, expectation.coherence)
        actual_set = set(trace.final.members)
        wanted_set = _literal_set(expectation.conclusions or [])
        if trace.final.is_lit or actual_set != wanted_set:
            return f"{expectation.label}: expected {sorted(map(str, wanted_set))}, got {trace.final}"
        return None

    @staticmethod
    def _show_family(family: Set[frozenset]) -> List[List[str]]:
        return sorted(sorted(str(lit) for lit in members) for members in family)

    def check_fixture(self, program_file: Path) -> FixtureResult:
        sidecar = program_file.with_name(program_file.stem + SIDECAR_SUFFIX)
        name = program_file.stem
        try:
            spec = FixtureSpec.from_file(sidecar)
            program = load_program(program_file, strict_names=self.config.strict_names)
            if spec.seminormal:
                program = seminormalize(program)
        except (ProgramError, FileNotFoundError, ValueError) as e:
            self.logger.error(f"Fixture {name} could not be loaded: {e}")
            return FixtureResult(name=name, passed=False, mismatches=[str(e)])
        mismatches = []
        for expectation in spec.expectations:
            problem = self.check_expectation(program, expectation)
            if problem:
                self.logger.error(f"{name}: {problem}")
                mismatches.append(problem)
        return FixtureResult(
            name=name,
            passed=not mismatches,
            checks=len(spec.expectations),
            mismatches=mismatches,
        )

    def check_fixtures(self, directory: Optional[Path] = None) -> List[FixtureResult]:
        directory = directory or FIXTURES_DIR
        files = list_fixtures(directory)
        results = []
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=self.console,
        ) as progress:
            task = progress.add_task("Checking fixtures...", total=len(files))
            for program_file in files:
                results.append(self.check_fixture(program_file))
                progress.update(task, advance=1)
        passed = sum(1 for r in results if r.passed)
        self.logger.info(f"{passed}/{len(results)} fixtures passed")
        return results


def list_fixtures(directory: Optional[Path] = None) -> List[Path]:
    directory = directory or FIXTURES_DIR
    if not directory.is_dir():
        raise FileNotFoundError(f"Fixture directory not found: {directory}")
    return sorted(
        path
        for path in directory.glob("*.lp")
        if path.with_name(path.stem + SIDECAR_SUFFIX).exists()
    )
