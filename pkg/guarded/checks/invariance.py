"""Bisimulation-invariance checks: which functions can see a delay."""
from typing import Any, List

from ..data import Now, PCons, delay_map
from ..effects import apply_action_head
from ..evaluation import GROUND, DelayOf, ObsBudget, PStreamOf, Report, check_bisim_invariance
from ..generators import (
    delays,
    prompt_pstreams,
    pstreams,
    suspended,
)
from ..types import Check, CheckContext, CheckResult
from .gwbeq import predict_targets
from .utilities import at_least, from_reports, timed

DELAY_DEPTHS = (1, 2, 3)


def is_now(d: Any) -> bool:
    """Whether the outermost constructor is ``Now``."""
    return isinstance(d, Now)


def _head_state(p: Any) -> Any:
    return apply_action_head(p, 0)


def _pad_tail(p: Any, layers: int) -> Any:
    if isinstance(p, PCons):
        return PCons(p.head, PStreamOf().pad(p.tail, layers))
    return p


def _budget(ctx: CheckContext) -> ObsBudget:
    return ObsBudget(ctx.depth, ctx.fuel)


def _flagged_check(ctx: CheckContext) -> CheckResult:
    """Functions that inspect constructors are caught by padding."""
    count = at_least(ctx, 100)
    budget = _budget(ctx)
    reports = [
        check_bisim_invariance(
            is_now, DelayOf(), GROUND, delays(ctx.seed, count), DELAY_DEPTHS, budget, subject="is_now"
        ),
        check_bisim_invariance(
            _head_state,
            PStreamOf(),
            GROUND,
            prompt_pstreams(ctx.seed, count),
            DELAY_DEPTHS,
            budget,
            subject="apply_action_head(-, 0)",
        ),
    ]
    return from_reports(
        "invariance_flagged",
        "invariance",
        reports,
        expect_pass=False,
        suggestion="Padding with delay should change the output of a constructor test",
    )


def _preserved_check(ctx: CheckContext) -> CheckResult:
    """Maps, constants and every predict ignore extra delay."""
    count = at_least(ctx, 100)
    seed, budget = ctx.seed, _budget(ctx)
    reports: List[Report] = [
        check_bisim_invariance(
            lambda d: delay_map(lambda x: x + 1, d),
            DelayOf(),
            DelayOf(),
            delays(seed, count),
            DELAY_DEPTHS,
            budget,
            subject="map(+1)",
        ),
        check_bisim_invariance(
            lambda p: 42, PStreamOf(), GROUND, pstreams(seed, count), DELAY_DEPTHS, budget, subject="const 42"
        ),
        check_bisim_invariance(
            _head_state,
            PStreamOf(),
            GROUND,
            prompt_pstreams(seed, count),
            DELAY_DEPTHS,
            budget,
            pad=_pad_tail,
            subject="apply_action_head(-, 0) with prompt heads",
        ),
    ]
    for target in predict_targets():
        reports.append(
            check_bisim_invariance(
                target.predict,
                target.c_in,
                target.c_out,
                suspended(seed, count, target.sample),
                DELAY_DEPTHS,
                budget,
                pad=target.pad,
                subject=target.subject,
            )
        )
    return from_reports("invariance_preserved", "invariance", reports)


invariance_flagged_check = Check(
    name="invariance_flagged",
    group="invariance",
    description="is_now and the head action are not bisimulation invariant",
    run=timed(_flagged_check),
    quick=True,
)

invariance_preserved_check = Check(
    name="invariance_preserved",
    group="invariance",
    description="map(+1), constants and the predicts are bisimulation invariant",
    run=timed(_preserved_check),
)
