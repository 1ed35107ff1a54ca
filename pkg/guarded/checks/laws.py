"""Traversal, applicative and update-monad law checks."""
from typing import Any, Callable

from ..data import pstream_of
from ..effects import ApplyAction, Update, head_action, update
from ..evaluation import GROUND, UpdateOf
from ..generators import (
    BISTREAM_KIT,
    COMPOSITES,
    CONT_CASE,
    IDENTITY_CASE,
    ITREE_KIT,
    LATER_CASE,
    MORPHISMS,
    READER_CASE,
    STATES,
    STREAM_KIT,
    UPDATE_CASE,
    WRITER_DFIRST_CASE,
    WRITER_DLAST_CASE,
    WRITER_PSTREAM_CASE,
    function_effects,
    values,
)
from ..laws import check_applicative_laws, check_update_monad_laws
from ..monoids import PSTREAM, SUM
from ..traversals import EffectCase, TraversableKit, check_traversal_laws
from ..types import Check, CheckContext, CheckResult
from .utilities import context_budgets, from_reports, timed

# Additive writes acting on an integer state: a lawful action in either order.
SUM_ACTION: ApplyAction[int, int] = ApplyAction(SUM, lambda p, s: s + p)
UPDATE_SUM_CASE = EffectCase(
    "Update[Sum]",
    update(SUM_ACTION),
    lambda n: Update(lambda s: (n, s * n)),
    lambda c: UpdateOf(c, GROUND, STATES),
)

APPLICATIVE_CASES = (
    IDENTITY_CASE,
    LATER_CASE,
    READER_CASE,
    WRITER_PSTREAM_CASE,
    WRITER_DFIRST_CASE,
    WRITER_DLAST_CASE,
    UPDATE_SUM_CASE,
    CONT_CASE,
)


def _law_samples(ctx: CheckContext) -> int:
    return max(50, ctx.samples // 2)


def _traversal_check(kit: TraversableKit) -> Callable[[CheckContext], CheckResult]:
    def run(ctx: CheckContext) -> CheckResult:
        reports = check_traversal_laws(
            kit, COMPOSITES, MORPHISMS, ctx.seed, _law_samples(ctx), context_budgets(ctx)
        )
        return from_reports(
            f"laws_{kit.name}",
            "laws",
            reports,
            suggestion="Re-run with --verbose to see the sample and budget of each finding",
        )

    run.__doc__ = f"Identity, composition and naturality for {kit.name}."
    return run


def _applicative_check(ctx: CheckContext) -> CheckResult:
    """Applicative laws for every effect in the catalog."""
    count = _law_samples(ctx)
    budgets = context_budgets(ctx)
    reports = [
        check_applicative_laws(
            case.effect,
            case.carrier(GROUND),
            values(case, ctx.seed, count),
            function_effects(case, ctx.seed, count),
            budgets,
        )
        for case in APPLICATIVE_CASES
    ]
    return from_reports("laws_applicative", "laws", reports)


def _continuation(a: Any) -> Update[Any, int, int]:
    return Update(lambda s: (pstream_of(a + s), a * s))


def _update_monad_check(ctx: CheckContext) -> CheckResult:
    """Bind identities for the head action, and where its composition breaks."""
    count = _law_samples(ctx)
    budgets = context_budgets(ctx)
    carrier = UPDATE_CASE.carrier(GROUND)
    identities = check_update_monad_laws(
        head_action(PSTREAM), carrier, values(UPDATE_CASE, ctx.seed, count), _continuation, budgets
    )
    head = check_applicative_laws(
        UPDATE_CASE.effect,
        carrier,
        values(UPDATE_CASE, ctx.seed, count),
        function_effects(UPDATE_CASE, ctx.seed, count),
        budgets,
    )
    broken = sorted({f.check for f in head.findings})
    result = from_reports(
        "laws_update_monad",
        "laws",
        [identities],
        extra={"head_action_failing_laws": broken, "head_action_witness": head.findings[:1]},
    )
    if broken != ["composition"]:
        result.success = False
        result.message = f"head action broke {broken or 'nothing'}, expected only composition"
    return result


laws_stream_check = Check(
    name="laws_stream",
    group="laws",
    description="Traversal laws for Stream across the effect catalog",
    run=timed(_traversal_check(STREAM_KIT)),
)

laws_itree_check = Check(
    name="laws_itree",
    group="laws",
    description="Traversal laws for ITree across the effect catalog",
    run=timed(_traversal_check(ITREE_KIT)),
)

laws_bistream_check = Check(
    name="laws_bistream",
    group="laws",
    description="Traversal laws for Bistream across the effect catalog",
    run=timed(_traversal_check(BISTREAM_KIT)),
)

laws_applicative_check = Check(
    name="laws_applicative",
    group="laws",
    description="Identity, homomorphism, interchange and composition per effect",
    run=timed(_applicative_check),
)

laws_update_monad_check = Check(
    name="laws_update_monad",
    group="laws",
    description="Update monad identities; the head action's composition witness",
    run=timed(_update_monad_check),
)
