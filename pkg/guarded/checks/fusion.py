"""Fusion: the infinite traversal agrees with list sequencing on finite input."""
from ..evaluation import ObsBudget
from ..generators import FUSION_CASES, effect_lists
from ..traversals import fusion_check
from ..types import Check, CheckContext, CheckResult
from .utilities import at_least, from_reports, timed

# Generated lists are at most this long; budgets must see them whole.
MAX_LEN = 8


def _fusion_check(ctx: CheckContext) -> CheckResult:
    """Exact observation equality with the list oracle, per effect."""
    count = at_least(ctx, 200)
    budget = ObsBudget(max(ctx.depth, MAX_LEN), ctx.fuel)
    reports = [
        fusion_check(case, effect_lists(case, ctx.seed, count, MAX_LEN), budget) for case in FUSION_CASES
    ]
    return from_reports(
        "fusion",
        "fusion",
        reports,
        extra={"effects": [case.name for case in FUSION_CASES]},
        suggestion="isequence_stream and the list oracle associate effects differently",
    )


fusion_check_all = Check(
    name="fusion",
    group="fusion",
    description="leval . isequence . llift agrees with list sequence",
    run=timed(_fusion_check),
)
