"""Helpers shared by the check modules."""
import time
from typing import Any, Callable, Dict, Iterable, List, Optional

from ..evaluation import Report, render
from ..generators import budgets
from ..types import CheckContext, CheckResult

# Findings kept per check; the rest are counted, not listed.
MAX_FINDINGS = 10


def context_budgets(ctx: CheckContext) -> tuple:
    return budgets(ctx.depth, ctx.fuel)


def at_least(ctx: CheckContext, minimum: int) -> int:
    return max(ctx.samples, minimum)


def from_reports(
    name: str,
    group: str,
    reports: Iterable[Report],
    expect_pass: bool = True,
    suggestion: Optional[str] = None,
    extra: Optional[Dict[str, Any]] = None,
) -> CheckResult:
    """Fold law reports into one CheckResult.

    With ``expect_pass=False`` every report must carry a finding: the check
    demonstrates a counterexample instead of a law.
    """
    reports = list(reports)
    wrong = [r for r in reports if r.passed != expect_pass]
    findings: List[Dict[str, Any]] = []
    for report in wrong:
        body = report.to_json()
        body["findings"] = body["findings"][:MAX_FINDINGS]
        findings.append(body)

    details: Dict[str, Any] = {
        "reports": len(reports),
        "samples": sum(r.samples for r in reports),
    }
    if not expect_pass:
        details["witnesses"] = [render(r.findings[0]) for r in reports if r.findings]
    if extra:
        details.update(render(extra))

    held = len(reports) - len(wrong)
    verb = "held" if expect_pass else "refuted"
    return CheckResult(
        name=name,
        group=group,
        success=not wrong,
        duration=0,
        message=f"{held}/{len(reports)} {verb}",
        details=details,
        findings=findings[:MAX_FINDINGS],
        suggestion=None if not wrong else suggestion,
    )


def expectations(name: str, group: str, outcomes: Dict[str, bool], observed: Dict[str, Any]) -> CheckResult:
    """CheckResult for a table of named yes/no expectations."""
    failed = sorted(label for label, ok in outcomes.items() if not ok)
    return CheckResult(
        name=name,
        group=group,
        success=not failed,
        duration=0,
        message=f"{len(outcomes) - len(failed)}/{len(outcomes)} expectations met",
        details=render(observed),
        findings=[{"expectation": label, "observed": render(observed.get(label))} for label in failed],
    )


def timed(run: Callable[[CheckContext], CheckResult]) -> Callable[[CheckContext], CheckResult]:
    """Stamp the wall time of a check into its result."""

    def wrapper(ctx: CheckContext) -> CheckResult:
        start = time.perf_counter()
        result = run(ctx)
        result.duration = (time.perf_counter() - start) * 1000
        return result

    wrapper.__name__ = getattr(run, "__name__", "check")
    wrapper.__doc__ = run.__doc__
    return wrapper
