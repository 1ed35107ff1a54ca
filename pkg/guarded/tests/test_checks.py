"""Tests for the law-suite registry and every registered check."""

from __future__ import annotations

import pytest

from guarded.checks import all_checks, get_checks_by_name, quick_checks
from guarded.checks.evaluation import extends_observation
from guarded.checks.gwbeq import predict_targets
from guarded.checks.invariance import DELAY_DEPTHS, invariance_preserved_check
from guarded.checks.utilities import expectations, from_reports
from guarded.core import EXHAUSTED
from guarded.data import Now, stream_of, wait_n
from guarded.evaluation import (
    DelayOf,
    Finding,
    ObsBudget,
    Report,
    Seq,
    StreamOf,
    Terminator,
    check_bisim_invariance,
    leval,
)
from guarded.generators import suspended
from guarded.types import CheckContext

SMALL = CheckContext(seed=3, samples=20, depth=4, fuel=500)


class TestRegistry:
    """Lookup by group and name."""

    def test_names_are_unique(self) -> None:
        names = [c.name for c in all_checks]
        assert len(names) == len(set(names))

    def test_quick_checks_are_a_subset(self) -> None:
        assert quick_checks
        assert all(c in all_checks for c in quick_checks)

    def test_group_lookup(self) -> None:
        assert [c.name for c in get_checks_by_name(["gwbeq"])] == [
            "gwbeq_predicts",
            "gwbeq_waits",
            "gwbeq_maybe_candidate",
            "gwbeq_closure",
        ]

    def test_substring_lookup_is_case_insensitive(self) -> None:
        assert [c.name for c in get_checks_by_name(["NEGATIVE_F"])] == ["negative_forced"]

    def test_several_names_without_duplicates(self) -> None:
        found = get_checks_by_name(["fusion", "fusion", " "])
        assert [c.name for c in found] == ["fusion"]


class TestFolding:
    """Reports and expectations become CheckResults."""

    def test_passing_reports(self) -> None:
        result = from_reports("x", "g", [Report("a", "s", 3), Report("b", "s", 2)])
        assert result.success
        assert result.message == "2/2 held"
        assert result.details["samples"] == 5

    def test_counterexample_reports_need_findings(self) -> None:
        witness = Report("a", "s", 1, [Finding("a", 0, None, 1, 2)])
        assert from_reports("x", "g", [witness], expect_pass=False).success
        assert not from_reports("x", "g", [Report("a", "s", 1)], expect_pass=False).success

    def test_failed_expectations_are_listed(self) -> None:
        result = expectations("x", "g", {"one": True, "two": False}, {"two": 5})
        assert not result.success
        assert result.findings == [{"expectation": "two", "observed": 5}]


class TestQuickChecks:
    """Every quick check passes on a small context."""

    @pytest.mark.parametrize("check", quick_checks, ids=lambda c: c.name)
    def test_quick_check_passes(self, check) -> None:
        result = check.run(SMALL)
        assert result.success, (result.message, result.findings[:2])
        assert result.duration >= 0


class TestFullChecks:
    """The checks outside the quick subset pass on the same small context."""

    @pytest.mark.parametrize(
        "check", [c for c in all_checks if not c.quick], ids=lambda c: c.name
    )
    def test_full_check_passes(self, check) -> None:
        result = check.run(SMALL)
        assert result.success, (result.message, result.findings[:2])


class TestPredictInvariance:
    """Padding an input with delay never changes what a predict observes to."""

    def test_preserved_check_covers_every_predict(self) -> None:
        result = invariance_preserved_check.run(SMALL)
        assert result.success, result.findings[:2]
        assert result.details["reports"] == 3 + len(predict_targets())

    @pytest.mark.parametrize("target", predict_targets(), ids=lambda t: t.subject)
    def test_predict_is_invariant(self, target) -> None:
        report = check_bisim_invariance(
            target.predict,
            target.c_in,
            target.c_out,
            suspended(SMALL.seed, 20, target.sample),
            DELAY_DEPTHS,
            ObsBudget(SMALL.depth, SMALL.fuel),
            pad=target.pad,
            subject=target.subject,
        )
        assert report.passed, report.findings[:2]
        assert report.samples == 20


class TestMonotonicity:
    """A bigger budget may turn ⊥ into a value, wherever it sits."""

    def test_element_level_bottom_is_refined(self) -> None:
        waits = stream_of(wait_n(Now(5), 3), wait_n(Now(6), 1))
        small = leval(waits, StreamOf(DelayOf()), ObsBudget(4, 2)).result
        big = leval(waits, StreamOf(DelayOf()), ObsBudget(8, 4)).result
        assert small == Seq((EXHAUSTED,), Terminator.EXHAUSTED)
        assert big == Seq((5, EXHAUSTED), Terminator.EXHAUSTED)
        assert extends_observation(small, big)

    def test_nested_values_must_agree(self) -> None:
        assert extends_observation((1, EXHAUSTED), (1, 2))
        assert not extends_observation((1, EXHAUSTED), (3, 2))

    def test_ended_observations_must_stay_ended(self) -> None:
        ended = Seq((1,), Terminator.ENDED)
        assert extends_observation(ended, ended)
        assert not extends_observation(ended, Seq((1, 2), Terminator.TRUNCATED))
