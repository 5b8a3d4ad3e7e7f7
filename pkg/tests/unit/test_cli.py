"""Unit tests for the command-line interface."""

import json
import logging
from pathlib import Path
from typing import Iterator, List

import pytest
from click.testing import CliRunner, Result

from farey_duality import __version__, main
from farey_duality.cli.app import cli
from farey_duality.models.report import VerificationReport
from farey_duality.verify import suites
from farey_duality.verify.suites import SuiteName, SuiteOptions


@pytest.fixture(autouse=True)
def reset_logging() -> Iterator[None]:
    """Drop the handlers each invocation installs on the root logger."""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    root.setLevel(logging.WARNING)


class Runner:
    """Invokes the CLI against one config directory."""

    def __init__(self, config_dir: Path) -> None:
        self.config_dir = config_dir
        self.runner = CliRunner()

    def __call__(self, *args: str) -> Result:
        argv: List[str] = ["--config-dir", str(self.config_dir), *args]
        return self.runner.invoke(cli, argv)


@pytest.fixture
def run(tmp_path: Path) -> Runner:
    """Fixture invoking the CLI with a private config directory."""
    return Runner(tmp_path)


def test_version(run: Runner) -> None:
    """Test --version prints the package version."""
    result = run("--version")

    assert result.exit_code == 0
    assert __version__ in result.output


def test_tree_text(run: Runner) -> None:
    """Test a Stern-Brocot dump in text form."""
    result = run("tree", "sb", "--depth", "2")

    assert result.exit_code == 0
    assert result.output.splitlines() == ["1/1", "2/1", "1/2", "3/1", "3/2", "2/3", "1/3"]


def test_tree_json(run: Runner) -> None:
    """Test a Tree(D) dump in JSON form."""
    result = run("tree", "ivec", "--depth", "1", "--format", "json")

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["kind"] == "ivec"
    assert [node["value"] for node in data["nodes"]] == [[0, 0, 1], [1, 0, 2], [0, 1, 2]]


def test_tree_uses_saved_format(run: Runner) -> None:
    """Test the saved default format applies when --format is absent."""
    assert run("config", "set", "tree_format", "dot").exit_code == 0

    result = run("tree", "cw", "--depth", "0")

    assert result.exit_code == 0
    assert result.output.startswith('digraph "cw" {')


def test_tree_rejects_unknown_kind(run: Runner) -> None:
    """Test an unknown tree kind is a usage error."""
    assert run("tree", "hyperbolic").exit_code == 2


def test_locate(run: Runner) -> None:
    """Test locating fractions in both trees."""
    result = run("locate", "sb", "3/2")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["RL", "12"]

    result = run("locate", "cw", "3/2")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["LR", "21"]


@pytest.mark.parametrize("fraction", ["0/1", "1/0", "3/x", "-1/2", "2/4"])
def test_locate_rejects_bad_fractions(run: Runner, fraction: str) -> None:
    """Test fractions outside the tree or malformed ones exit with code 2."""
    result = run("locate", "sb", fraction)

    assert result.exit_code == 2
    assert "Error" in result.output


def test_word(run: Runner) -> None:
    """Test Christoffel words from the command line."""
    result = run("word", "--slope", "3/5")

    assert result.exit_code == 0
    assert result.output.strip() == "aabaabab"
    assert run("word", "--slope", "-1/2").exit_code == 2


def test_approx(run: Runner) -> None:
    """Test best approximation with explicit and saved bounds."""
    result = run("approx", "3.14159265358979", "--max-den", "113")
    assert result.exit_code == 0
    assert result.output.strip() == "355/113"

    assert run("config", "set", "max_den", "7").exit_code == 0
    assert run("approx", "3.14159265358979").output.strip() == "22/7"


def test_approx_accepts_negative_values(run: Runner) -> None:
    """Test a leading minus sign is read as part of the value."""
    result = run("approx", "-0.5", "--max-den", "10")

    assert result.exit_code == 0
    assert result.output.strip() == "-1/2"
    assert run("approx", "--max-den", "3", "-0.75").output.strip() == "-2/3"


@pytest.mark.parametrize("args", [["abc"], ["0.5", "--max-den", "0"]])
def test_approx_rejects_bad_input(run: Runner, args: List[str]) -> None:
    """Test malformed decimals and bounds are usage errors."""
    assert run("approx", *args).exit_code == 2


def test_verify_passes(run: Runner) -> None:
    """Test a passing suite prints a summary and exits 0."""
    result = run("verify", "main1", "--depth", "4")

    assert result.exit_code == 0
    assert "main1: PASS" in result.output


def test_verify_json(run: Runner) -> None:
    """Test the JSON report of a suite run."""
    result = run("verify", "det", "--bound", "4", "--samples", "5", "--seed", "2", "--json")

    assert result.exit_code == 0
    report = VerificationReport.model_validate_json(result.output)
    assert report.passed
    assert report.parameters == {"bound": 4, "samples": 5, "seed": 2}


def test_verify_is_deterministic(run: Runner) -> None:
    """Test the same seed gives the same report."""
    first = run("verify", "duality", "--samples", "10", "--seed", "4", "--json")
    second = run("verify", "duality", "--samples", "10", "--seed", "4", "--json")

    assert first.exit_code == 0
    assert first.output == second.output


def test_verify_failure_exits_one(run: Runner, monkeypatch: pytest.MonkeyPatch) -> None:
    """Test a counterexample makes verify exit with code 1."""

    def failing(options: SuiteOptions) -> VerificationReport:
        return VerificationReport.failure("paths", 1, "1/2", "forced", bound=options.bound)

    monkeypatch.setitem(suites.SUITES, SuiteName.PATHS, failing)

    result = run("verify", "paths", "--bound", "3")

    assert result.exit_code == 1
    assert "paths: FAIL at 1/2: forced" in result.output


def test_verify_rejects_unknown_suite(run: Runner) -> None:
    """Test an unknown suite name is a usage error."""
    assert run("verify", "main3").exit_code == 2


def test_config_show_set_reset(run: Runner) -> None:
    """Test the config subcommands."""
    shown = json.loads(run("config", "show").output)
    assert shown["max_den"] == 1000

    result = run("config", "set", "seed", "42")
    assert result.exit_code == 0
    assert result.output.strip() == "seed = 42"
    assert json.loads(run("config", "show").output)["seed"] == 42

    assert run("config", "reset").exit_code == 0
    assert json.loads(run("config", "show").output)["seed"] == 0


@pytest.mark.parametrize(("key", "value"), [("nope", "1"), ("max_den", "zero")])
def test_config_set_rejects_bad_settings(run: Runner, key: str, value: str) -> None:
    """Test unknown keys and invalid values exit with code 2."""
    assert run("config", "set", key, value).exit_code == 2


def test_main_runs_cli(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test the console entry point."""
    monkeypatch.setattr(
        "sys.argv", ["farey-duality", "--config-dir", str(tmp_path), "word", "--slope", "1/1"]
    )

    with pytest.raises(SystemExit) as exc_info:
        main.main()

    assert exc_info.value.code == 0
    assert capsys.readouterr().out.strip() == "ab"


def test_main_reports_unexpected_errors(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test an unexpected exception exits with code 1."""

    def broken(prog_name: str) -> None:
        raise RuntimeError("boom")

    monkeypatch.setattr(main, "cli", broken)

    with pytest.raises(SystemExit) as exc_info:
        main.main()

    assert exc_info.value.code == 1
