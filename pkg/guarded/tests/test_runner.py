"""Tests for the check runner and the reporter."""

from __future__ import annotations

import io
import json
import multiprocessing
import time

import pytest

from guarded.reporter import Reporter
from guarded.runner import run_check_with_timeout, run_checks
from guarded.types import Check, CheckContext, CheckResult, DemoResult


def passing(ctx: CheckContext) -> CheckResult:
    return CheckResult("passing", "demo", True, 0, "1/1 held", details={"seed": ctx.seed})


def failing(ctx: CheckContext) -> CheckResult:
    return CheckResult(
        "failing", "demo", False, 3, "0/1 held",
        findings=[{"check": "x"}], suggestion="Look at finding x",
    )


def raising(ctx: CheckContext) -> CheckResult:
    raise RuntimeError("boom")


def sleeping(ctx: CheckContext) -> CheckResult:
    time.sleep(0.5)
    return passing(ctx)


def stalling(ctx: CheckContext) -> CheckResult:
    time.sleep(5)
    return passing(ctx)


PASSING = Check("passing", "demo", "always passes", passing, quick=True)
FAILING = Check("failing", "demo", "always fails", failing)
RAISING = Check("raising", "demo", "raises", raising)
SLEEPING = Check("sleeping", "demo", "outlives its timeout", sleeping)
STALLING = Check("stalling", "demo", "runs far past its timeout", stalling)


def json_reporter() -> tuple:
    stream = io.StringIO()
    return Reporter(json_output=True, stream=stream), stream


# =============================================================================
# Runner
# =============================================================================


class TestRunner:
    """Sequential execution with timeouts."""

    async def test_results_keep_check_order(self) -> None:
        reporter, _ = json_reporter()
        results = await run_checks([PASSING, FAILING], CheckContext(seed=7), reporter)
        assert [r.name for r in results] == ["passing", "failing"]
        assert [r.success for r in results] == [True, False]
        assert results[0].details == {"seed": 7}

    async def test_zero_duration_is_filled_in(self) -> None:
        reporter, _ = json_reporter()
        results = await run_checks([PASSING, FAILING], CheckContext(), reporter)
        assert results[0].duration >= 0
        assert results[1].duration == 3

    async def test_exception_becomes_a_failed_result(self) -> None:
        reporter, _ = json_reporter()
        [result] = await run_checks([RAISING], CheckContext(), reporter)
        assert not result.success
        assert "boom" in result.message

    async def test_timeout(self) -> None:
        result = await run_check_with_timeout(SLEEPING, CheckContext(), timeout_ms=50)
        assert not result.success
        assert "timed out" in result.message
        assert "GUARDED_CHECK_TIMEOUT" in result.suggestion

    @pytest.mark.skipif(
        "fork" not in multiprocessing.get_all_start_methods(), reason="needs a forking platform"
    )
    async def test_timeout_bounds_wall_time(self) -> None:
        reporter, _ = json_reporter()
        started = time.monotonic()
        [stalled, after] = await run_checks(
            [STALLING, PASSING], CheckContext(timeout=100), reporter
        )
        assert time.monotonic() - started < 2.0
        assert "timed out after 100ms" in stalled.message
        assert after.success


# =============================================================================
# Reporter
# =============================================================================


class TestReporter:
    """Text and JSON-lines output."""

    async def test_json_lines_have_no_duration(self) -> None:
        reporter, stream = json_reporter()
        await run_checks([PASSING, FAILING], CheckContext(), reporter)
        lines = [json.loads(line) for line in stream.getvalue().splitlines()]
        assert [line["name"] for line in lines] == ["passing", "failing"]
        assert all("duration" not in line for line in lines)
        assert lines[1]["findings"] == [{"check": "x"}]

    def test_text_output_shows_suggestions_and_summary(self) -> None:
        stream = io.StringIO()
        reporter = Reporter(stream=stream)
        reporter.start()
        reporter.on_check_complete(failing(CheckContext()))
        reporter.finish([failing(CheckContext())])
        text = stream.getvalue()
        assert "✗ failing: 0/1 held" in text
        assert "💡 Look at finding x" in text
        assert "Results: 0/1 passed (1 failed)" in text

    def test_verbose_lists_findings(self) -> None:
        stream = io.StringIO()
        Reporter(verbose=True, stream=stream).on_check_complete(failing(CheckContext()))
        assert '- {"check": "x"}' in stream.getvalue()

    def test_no_colors_off_a_terminal(self) -> None:
        assert not Reporter(stream=io.StringIO()).use_colors

    def test_demo_mismatch_is_reported(self) -> None:
        stream = io.StringIO()
        result = DemoResult(
            demo="zip", params={}, elements=[1], terminator="exhausted",
            expected="truncated", fuel_used=3, exit_code=1,
        )
        Reporter(stream=stream).demo(result)
        assert "expected truncated, got exhausted" in stream.getvalue()

    def test_demo_json_merges_extras(self) -> None:
        reporter, stream = json_reporter()
        result = DemoResult(
            demo="d", params={"depth": 1}, elements=[], terminator="ended",
            expected="ended", fuel_used=0, exit_code=0, extras={"log": "⊥"},
        )
        reporter.demo(result)
        assert json.loads(stream.getvalue()) == {
            "demo": "d",
            "params": {"depth": 1},
            "elements": [],
            "terminator": "ended",
            "fuel_used": 0,
            "log": "⊥",
        }
