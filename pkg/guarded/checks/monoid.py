"""Monoid checks: laws up to bisimilarity, infinite chains, and the head action."""
from typing import Any, Dict

from ..core import EXHAUSTED
from ..data import Just, pstream_of
from ..effects import head_action
from ..evaluation import DelayOf, DFirstOf, DLastOf, ObsBudget, PStreamOf, leval
from ..generators import STATES, delays, dfirsts, dlasts, pairs_of, pstreams, triples_of, wait_free_pstreams
from ..laws import check_action_laws, check_monoid_laws, right_action_witness
from ..monoids import DFIRST, DLAST, PSTREAM, SUM, delay_monoid, dfirst, dlast, left_nested_chain, right_nested_chain
from ..types import Check, CheckContext, CheckResult
from .utilities import at_least, context_budgets, expectations, from_reports, timed

# Promptly-observed chain heads must show within this much fuel.
PROMPT_FUEL = 3
# A chain that never yields must still be pending after this much.
DIVERGENT_FUEL = 10_000


def _laws_check(ctx: CheckContext) -> CheckResult:
    """Identity and associativity for DFirst, DLast, PStream and Delay[Sum]."""
    count = at_least(ctx, 100)
    seed, budgets = ctx.seed, context_budgets(ctx)

    def triples(drawn: Any) -> Any:
        return triples_of(drawn, seed, count)

    reports = [
        check_monoid_laws(DFIRST, DFirstOf(), dfirsts(seed, count), budgets, triples),
        check_monoid_laws(DLAST, DLastOf(), dlasts(seed, count), budgets, triples),
        check_monoid_laws(PSTREAM, PStreamOf(), pstreams(seed, count), budgets, triples),
        check_monoid_laws(delay_monoid(SUM), DelayOf(), delays(seed, count), budgets, triples),
    ]
    return from_reports("monoid_laws", "monoid", reports)


def _chain(monoid: Any, nested: Any, unit: Any, carrier: Any, fuel: int) -> Any:
    return leval(nested(monoid, lambda n: unit(n + 1)), carrier, ObsBudget(0, fuel))


def _chains_check(ctx: CheckContext) -> CheckResult:
    """Infinitely nested appends: only the prompt side of each biased monoid yields."""
    runs = {
        "dfirst right-nested": _chain(DFIRST, right_nested_chain, dfirst, DFirstOf(), PROMPT_FUEL),
        "dfirst left-nested": _chain(DFIRST, left_nested_chain, dfirst, DFirstOf(), DIVERGENT_FUEL),
        "dlast left-nested": _chain(DLAST, left_nested_chain, dlast, DLastOf(), PROMPT_FUEL),
        "dlast right-nested": _chain(DLAST, right_nested_chain, dlast, DLastOf(), DIVERGENT_FUEL),
    }
    outcomes = {
        "dfirst right-nested": runs["dfirst right-nested"].result == Just(1),
        "dfirst left-nested": runs["dfirst left-nested"].result is EXHAUSTED,
        "dlast left-nested": runs["dlast left-nested"].result == Just(1),
        "dlast right-nested": runs["dlast right-nested"].result is EXHAUSTED,
    }
    observed: Dict[str, Any] = {
        label: {"result": obs.result, "fuel_used": obs.fuel_used} for label, obs in runs.items()
    }
    return expectations("monoid_chains", "monoid", outcomes, observed)


def _action_check(ctx: CheckContext) -> CheckResult:
    """The head action is a left action; the right-action order fails."""
    count = at_least(ctx, 100)
    action = head_action(PSTREAM)
    report = check_action_laws(action, pairs_of(wait_free_pstreams(ctx.seed, count), ctx.seed, count), STATES)
    combined, sequential = right_action_witness(action, pstream_of(1), pstream_of(2), 0)
    result = from_reports(
        "monoid_action",
        "monoid",
        [report],
        extra={"right_action_witness": {"act(p<>q)": combined, "act(q).act(p)": sequential}},
    )
    if combined == sequential:
        result.success = False
        result.message = "right-action order unexpectedly held"
    return result


monoid_laws_check = Check(
    name="monoid_laws",
    group="monoid",
    description="DFirst, DLast, PStream and Delay monoid laws up to bisimilarity",
    run=timed(_laws_check),
)

monoid_chains_check = Check(
    name="monoid_chains",
    group="monoid",
    description="Right- and left-nested infinite DFirst/DLast chains",
    run=timed(_chains_check),
    quick=True,
)

monoid_action_check = Check(
    name="monoid_action",
    group="monoid",
    description="Action laws for apply_action_head on PStream",
    run=timed(_action_check),
    quick=True,
)
