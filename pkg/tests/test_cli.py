import json
import logging
import tempfile
from pathlib import Path

from click.testing import CliRunner

from prio_wfs import __version__
from prio_wfs.cli.main import EXIT_ERROR, EXIT_INTERNAL, EXIT_OK, EXIT_TOO_LARGE, cli
from prio_wfs.core.parser import load_program, parse_literal
from prio_wfs.core.program import LiteralSet
from prio_wfs.core.semantics import wfs_pr
from prio_wfs.core.solver import FIXTURES_DIR


def fixture(name: str) -> str:
    return str(FIXTURES_DIR / f"{name}.lp")


class TestSolveCommand:
    """Tests for the solve command."""

    def test_default_semantics(self):
        """Test wfs-pr on P3."""
        result = CliRunner().invoke(cli, ["solve", fixture("p3")])
        assert result.exit_code == EXIT_OK
        assert "wfs-pr: {-(n1 < n2), c, n2 < n1}" in result.output

    def test_json_output(self):
        """Test the JSON report on stdout."""
        result = CliRunner().invoke(cli, ["solve", fixture("p0"), "-s", "wfs-star", "-f", "json"])
        assert result.exit_code == EXIT_OK
        data = json.loads(result.stdout)
        assert data["semantics"] == "wfs-star"
        assert data["conclusions"] == ["b"]

    def test_trace(self):
        """Test the trace of the legal example."""
        result = CliRunner().invoke(cli, ["solve", fixture("legal_plus"), "-t", "-f", "json"])
        data = json.loads(result.stdout)
        assert len(data["trace"]) == 4
        assert "-perfected" in data["trace"][2]["conclusions"]

    def test_incremental_with_coherence(self):
        """Test engine and coherence flags together."""
        result = CliRunner().invoke(
            cli, ["solve", fixture("coherence"), "-e", "incremental", "--coherence", "-f", "json"]
        )
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout)["conclusions"] == ["-b", "a"]

    def test_answer_sets(self):
        """Test answer-set mode."""
        result = CliRunner().invoke(cli, ["solve", fixture("cycle4"), "-s", "answer", "-f", "json"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout)["answer_sets"] == [["a", "c"], ["b", "d"]]

    def test_too_large(self):
        """Test the enumeration guard exit code."""
        result = CliRunner().invoke(cli, ["solve", fixture("cycle4"), "-s", "answer", "--max-atoms", "2"])
        assert result.exit_code == EXIT_TOO_LARGE

    def test_invalid_combination(self):
        """Test an engine outside wfs-pr is a configuration error."""
        result = CliRunner().invoke(cli, ["solve", fixture("p0"), "-s", "wfs", "-e", "incremental"])
        assert result.exit_code == EXIT_ERROR
        assert "Invalid configuration" in result.output

    def test_syntax_error(self):
        """Test a malformed program."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("bad.lp").write_text("a <- b\n")
            result = runner.invoke(cli, ["solve", "bad.lp"])
        assert result.exit_code == EXIT_ERROR
        assert "Error" in result.output

    def test_named_strict_rule(self):
        """Test named strict rules fail unless downgraded to a warning."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("named.lp").write_text("n1: a.\n")
            assert runner.invoke(cli, ["solve", "named.lp"]).exit_code == EXIT_ERROR
            result = runner.invoke(cli, ["solve", "named.lp", "--strict-names", "warn", "-f", "json"])
        assert result.exit_code == EXIT_OK

    def test_seminormal_flag(self):
        """Test seminormalizing P1 makes n2 win."""
        result = CliRunner().invoke(cli, ["solve", fixture("p1"), "--seminormal", "-f", "json"])
        assert "-b" in json.loads(result.stdout)["conclusions"]

    def test_config_file(self):
        """Test options from a configuration file, overridden on the command line."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("run.yaml").write_text("semantics: wfs\nformat: json\n")
            result = runner.invoke(cli, ["solve", fixture("p3"), "-c", "run.yaml", "-s", "wfs-star"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout)["semantics"] == "wfs-star"

    def test_output_file(self):
        """Test writing the report to a file."""
        with tempfile.TemporaryDirectory() as tmp:
            output = Path(tmp) / "report.json"
            result = CliRunner().invoke(cli, ["solve", fixture("p3"), "-o", str(output)])
            assert result.exit_code == EXIT_OK
            assert json.loads(output.read_text())["conclusions"] == ["-(n1 < n2)", "c", "n2 < n1"]

    def test_diff(self):
        """Test diff mode on a consistent program."""
        result = CliRunner().invoke(cli, ["solve", fixture("legal_plus"), "-s", "diff"])
        assert result.exit_code == EXIT_OK
        assert "wfs ⊆ wfs-star" in result.output

    def test_empty_result(self):
        """Test P0 under wfs concludes nothing."""
        result = CliRunner().invoke(cli, ["solve", fixture("p0"), "-s", "wfs"])
        assert result.exit_code == EXIT_OK
        assert "∅ conclusions" in result.output

    def test_json_literals_read_back(self):
        """Test the reported literals parse back to the computed sets."""
        path = FIXTURES_DIR / "legal_plus.lp"
        result = CliRunner().invoke(cli, ["solve", str(path), "-t", "-f", "json"])
        data = json.loads(result.stdout)
        trace = wfs_pr(load_program(path))
        read_back = LiteralSet.of(parse_literal(text) for text in data["conclusions"])
        assert read_back == trace.final
        for reported, step in zip(data["trace"], trace.steps):
            literals = LiteralSet.of(parse_literal(t) for t in reported["conclusions"])
            assert literals == step.conclusions

    def test_verbose_enables_debug(self):
        """Test -v lowers the root logger to DEBUG."""
        root = logging.getLogger()
        previous = root.level
        try:
            result = CliRunner().invoke(cli, ["solve", fixture("p3"), "-v"])
            assert result.exit_code == EXIT_OK
            assert root.level == logging.DEBUG
            CliRunner().invoke(cli, ["solve", fixture("p3")])
            assert root.level == logging.INFO
        finally:
            root.setLevel(previous)

    def test_exit_codes_are_distinct(self):
        """Test the documented exit codes."""
        assert len({EXIT_OK, EXIT_ERROR, EXIT_TOO_LARGE, EXIT_INTERNAL}) == 4


class TestOtherCommands:
    """Tests for parse, conflicts, check and fixtures."""

    def test_version(self):
        """Test the version option."""
        result = CliRunner().invoke(cli, ["--version"])
        assert result.exit_code == EXIT_OK
        assert __version__ in result.output

    def test_parse_text(self):
        """Test the ground program as rules."""
        result = CliRunner().invoke(cli, ["parse", fixture("tweety"), "-f", "text"])
        assert result.exit_code == EXIT_OK
        assert "fly(tweety) <- bird(tweety), not -fly(tweety)." in result.output

    def test_parse_json(self):
        """Test the ground program as JSON."""
        result = CliRunner().invoke(cli, ["parse", fixture("p1"), "-f", "json", "--seminormal"])
        data = json.loads(result.stdout)
        assert data["rules"][0]["negative"] == ["-b", "c"]

    def test_parse_yaml(self):
        """Test the ground program as YAML."""
        result = CliRunner().invoke(cli, ["parse", fixture("p3"), "-f", "yaml"])
        assert result.exit_code == EXIT_OK
        assert "names:" in result.output

    def test_conflicts(self):
        """Test conflicts are listed by kind."""
        result = CliRunner().invoke(cli, ["conflicts", fixture("p2")])
        assert result.exit_code == EXIT_OK
        assert "type-I" in result.output
        assert "type-II" in result.output

    def test_no_conflicts(self):
        """Test a conflict-free program."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("calm.lp").write_text("a.\nn1: b <- a, not c.\n")
            result = runner.invoke(cli, ["conflicts", "calm.lp"])
        assert result.exit_code == EXIT_OK
        assert "No conflicts" in result.output

    def test_check_shipped_corpus(self):
        """Test every shipped fixture passes."""
        result = CliRunner().invoke(cli, ["check"])
        assert result.exit_code == EXIT_OK

    def test_check_failing_directory(self):
        """Test a failing fixture gives exit code 1."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("fx").mkdir()
            Path("fx/a.lp").write_text("a.\n")
            Path("fx/a.expected.yaml").write_text("expectations:\n  - semantics: wfs\n    conclusions: []\n")
            result = runner.invoke(cli, ["check", "fx"])
        assert result.exit_code == EXIT_ERROR

    def test_fixtures_export(self):
        """Test exporting the corpus with its sidecars."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(cli, ["fixtures", "--export", "corpus"])
            exported = {p.name for p in Path("corpus").iterdir()}
        assert result.exit_code == EXIT_OK
        assert {"p3.lp", "p3.expected.yaml"} <= exported
