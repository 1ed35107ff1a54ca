"""Tests for the guarded command line."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from guarded.cli import EX_USAGE, cli


@pytest.fixture
def runner(monkeypatch: pytest.MonkeyPatch) -> CliRunner:
    for name in ("GUARDED_SEED", "GUARDED_FUEL", "GUARDED_DEPTH", "GUARDED_SAMPLES",
                 "GUARDED_CHECK_TIMEOUT"):
        monkeypatch.delenv(name, raising=False)
    return CliRunner()


# =============================================================================
# run
# =============================================================================


class TestRun:
    """guarded run <demo>."""

    def test_reader_repeat_json(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["run", "reader-repeat", "--env", "1", "--depth", "5", "--json"])
        assert result.exit_code == 0
        out = json.loads(result.output)
        assert out["demo"] == "reader-repeat"
        assert out["elements"] == [1, 1, 1, 1, 1]
        assert out["terminator"] == "truncated"

    def test_state_transducer_text(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["run", "state-transducer", "--s0", "0", "--depth", "5"])
        assert result.exit_code == 0
        assert "state-transducer: [1, 2, 3, 4, 5] truncated" in result.output

    def test_expected_divergence_exits_two(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["run", "maybe-diverges", "--fuel", "1000"])
        assert result.exit_code == 2

    def test_divergence_is_bottom_in_json(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["run", "slast-infinite", "--fuel", "50", "--json"])
        assert result.exit_code == 2
        assert json.loads(result.output)["terminator"] == "exhausted"

    def test_depth_and_fuel_fall_back_to_the_environment(self, runner: CliRunner) -> None:
        result = runner.invoke(
            cli, ["run", "zip", "--json"], env={"GUARDED_DEPTH": "2", "GUARDED_FUEL": "10"}
        )
        assert result.exit_code == 0
        out = json.loads(result.output)
        assert out["elements"] == [[1, 0], [1, 1]]
        assert out["params"]["fuel"] == 10

    def test_unknown_demo_is_a_usage_error(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["run", "no-such-demo"])
        assert result.exit_code == EX_USAGE

    def test_missing_demo_is_a_usage_error(self, runner: CliRunner) -> None:
        assert runner.invoke(cli, ["run"]).exit_code == EX_USAGE

    def test_negative_fuel_is_a_usage_error(self, runner: CliRunner) -> None:
        assert runner.invoke(cli, ["run", "zip", "--fuel", "-1"]).exit_code == EX_USAGE

    def test_bad_environment_is_a_usage_error(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["run", "zip"], env={"GUARDED_FUEL": "lots"})
        assert result.exit_code == EX_USAGE


# =============================================================================
# suite and list
# =============================================================================


class TestSuite:
    """guarded suite and guarded list."""

    def test_filtered_suite_passes(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["suite", "--filter", "transpose", "--json"])
        assert result.exit_code == 0
        lines = [json.loads(line) for line in result.output.splitlines() if line.strip()]
        assert [line["name"] for line in lines] == ["transpose"]
        assert lines[0]["success"] is True

    def test_suite_json_is_reproducible(self, runner: CliRunner) -> None:
        args = ["suite", "--filter", "negative", "--json", "--seed", "42"]
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)
        assert first.exit_code == 0
        assert first.output == second.output

    def test_text_summary(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["suite", "--filter", "promptness"])
        assert result.exit_code == 0
        assert "Results: 1/1 passed" in result.output

    def test_unmatched_filter_is_a_usage_error(self, runner: CliRunner) -> None:
        assert runner.invoke(cli, ["suite", "--filter", "nothing-matches"]).exit_code == EX_USAGE

    def test_list(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["list"])
        assert result.exit_code == 0
        assert "reader-repeat" in result.output
        assert "gwbeq_predicts" in result.output

    def test_help(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        assert "suite" in result.output
