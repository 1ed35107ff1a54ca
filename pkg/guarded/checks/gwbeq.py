"""Weak-equivalence checks for every predict and stable wait."""
import random
from typing import Any, Callable, List, NamedTuple, Optional

from toolz import identity

from ..core import delay
from ..data import NOTHING, Just, Now, smap, wait_n
from ..effects import (
    READER,
    Compose,
    ConstPair,
    Op,
    Prod,
    compose,
    const_pair,
    predict_later,
    predict_maybe_candidate,
    predict_negative,
    predict_reader,
    prod,
    wait_from_pair_predict,
    writer,
)
from ..evaluation import (
    GROUND,
    Carrier,
    ComposeOf,
    ConstPairOf,
    DelayOf,
    DFirstOf,
    DLastOf,
    FunctionOf,
    LaterOf,
    MaybeOf,
    OpOf,
    Probe,
    ProdOf,
    PStreamOf,
    ReaderOf,
    Report,
    StreamOf,
    WriterOf,
    check_composition_closure,
    check_gwbeq,
)
from ..generators import (
    CONT_CASE,
    ENVS,
    IDENTITY_CASE,
    LATER_CASE,
    READER_CASE,
    UPDATE_CASE,
    WRITER_DFIRST_CASE,
    WRITER_DLAST_CASE,
    WRITER_PSTREAM_CASE,
    delays,
    dfirsts,
    dlasts,
    int_lists,
    pstreams,
    suspended,
)
from ..monoids import DELAY_STABLE, DFIRST, DLAST, PSTREAM, SUM, delay_monoid
from ..types import Check, CheckContext, CheckResult
from .utilities import at_least, context_budgets, from_reports, timed

PREDICATE_PROBES = (
    Probe("n>0", lambda n: n > 0),
    Probe("even", lambda n: n % 2 == 0),
    Probe("always", lambda n: True),
)

# Later (Op a r -> r) observed at predicate probes, and its predicted form.
NEGATIVE_IN = LaterOf(FunctionOf(OpOf(GROUND, DelayOf(), ()), DelayOf(), PREDICATE_PROBES))
NEGATIVE_OUT = FunctionOf(OpOf(LaterOf(), DelayOf(), ()), DelayOf(), PREDICATE_PROBES)


def _const_pair_sample(rng: random.Random) -> ConstPair[Any, int]:
    w = WRITER_PSTREAM_CASE.sample(rng)
    return ConstPair(w.log, w.value)


def _prod_sample(rng: random.Random) -> Prod[int]:
    return Prod(READER_CASE.sample(rng), WRITER_PSTREAM_CASE.sample(rng))


def _compose_sample(rng: random.Random) -> Compose[int]:
    return Compose(READER.map(WRITER_DFIRST_CASE.embed, READER_CASE.sample(rng)))


def _negative_sample(rng: random.Random) -> Callable[[Op[int, Any]], Any]:
    w, k = rng.randint(-5, 5), rng.randint(0, 2)
    if rng.random() < 0.2:
        return lambda op: Now(True)
    return lambda op: wait_n(op.run(w), k)


def _predict_negative(f: Any) -> Callable[[Op[Any, Any]], Any]:
    return lambda z: predict_negative(f, z, DELAY_STABLE)


def _pad_answer(x: Any, layers: int) -> Any:
    return x.map(lambda g: lambda op: wait_n(g(op), layers))


class PredictTarget(NamedTuple):
    """A shipped predict with its sampler and the carriers around it."""

    subject: str
    predict: Callable[[Any], Any]
    sample: Callable[[random.Random], Any]
    c_in: Carrier
    c_out: Carrier
    # Delay padding for inputs whose carrier cannot pad itself.
    pad: Optional[Callable[[Any, int], Any]] = None


def predict_targets() -> List[PredictTarget]:
    cases = (
        LATER_CASE,
        IDENTITY_CASE,
        READER_CASE,
        WRITER_PSTREAM_CASE,
        WRITER_DFIRST_CASE,
        WRITER_DLAST_CASE,
        UPDATE_CASE,
        CONT_CASE,
    )
    targets = [
        PredictTarget(
            f"predict[{c.name}]", c.effect.predict, c.sample, LaterOf(c.carrier(GROUND)), c.carrier(LaterOf())
        )
        for c in cases
    ]
    pair = const_pair(PSTREAM)
    both = prod(READER, writer(PSTREAM))
    nested = compose(READER, writer(DFIRST))
    targets.extend([
        PredictTarget(
            "predict[ConstPair[PStream]]",
            pair.predict,
            _const_pair_sample,
            LaterOf(ConstPairOf(PStreamOf(), GROUND)),
            ConstPairOf(PStreamOf(), LaterOf()),
        ),
        PredictTarget(
            "predict[Prod[Reader,Writer[PStream]]]",
            both.predict,
            _prod_sample,
            LaterOf(ProdOf(ReaderOf(GROUND, ENVS), WriterOf(GROUND, PStreamOf()))),
            ProdOf(ReaderOf(LaterOf(), ENVS), WriterOf(LaterOf(), PStreamOf())),
        ),
        PredictTarget(
            "predict[Compose[Reader,Writer[DFirst]]]",
            nested.predict,
            _compose_sample,
            LaterOf(ComposeOf(ReaderOf(WriterOf(GROUND, DFirstOf()), ENVS))),
            ComposeOf(ReaderOf(WriterOf(LaterOf(), DFirstOf()), ENVS)),
        ),
        PredictTarget(
            "predict_negative[Delay]",
            _predict_negative,
            _negative_sample,
            NEGATIVE_IN,
            NEGATIVE_OUT,
            pad=_pad_answer,
        ),
    ])
    return targets


def _predicts_check(ctx: CheckContext) -> CheckResult:
    """Every shipped predict is a gwbeq."""
    count = at_least(ctx, 100)
    reports = [
        check_gwbeq(
            t.predict, suspended(ctx.seed, count, t.sample), context_budgets(ctx), t.c_in, t.c_out, subject=t.subject
        )
        for t in predict_targets()
    ]
    return from_reports(
        "gwbeq_predicts", "gwbeq", reports, suggestion="A predict changes what its input observes to"
    )


def _pick(items: List[Any]) -> Callable[[random.Random], Any]:
    return lambda rng: rng.choice(items)


def _waits_check(ctx: CheckContext) -> CheckResult:
    """Stable carriers' waits, and the wait a pair predict implies."""
    count = at_least(ctx, 100)
    seed, budgets = ctx.seed, context_budgets(ctx)
    ps = pstreams(seed, count)
    ds = delays(seed, count)
    targets = (
        ("wait[PStream]", PSTREAM.wait, _pick(ps), PStreamOf()),
        ("wait[Delay]", DELAY_STABLE.wait, _pick(ds), DelayOf()),
        ("wait[Delay[Sum]]", delay_monoid(SUM).wait, _pick(ds), DelayOf()),
        ("wait[DFirst]", DFIRST.wait, _pick(dfirsts(seed, count)), DFirstOf()),
        ("wait[DLast]", DLAST.wait, _pick(dlasts(seed, count)), DLastOf()),
        ("wait_from_pair_predict[PStream]", wait_from_pair_predict(PSTREAM.stable), _pick(ps), PStreamOf()),
    )
    reports = [
        check_gwbeq(fn, suspended(seed, count, make), budgets, LaterOf(carrier), carrier, subject=subject)
        for subject, fn, make, carrier in targets
    ]
    return from_reports("gwbeq_waits", "gwbeq", reports)


def _maybe_candidate_check(ctx: CheckContext) -> CheckResult:
    """The always-Just guess for Maybe is caught on a delayed Nothing."""
    rng = random.Random(ctx.seed)
    samples = [delay(NOTHING), delay(Just(1))]
    samples += [delay(Just(rng.randint(-9, 9)) if rng.random() < 0.5 else NOTHING) for _ in range(30)]
    report = check_gwbeq(
        predict_maybe_candidate,
        samples,
        context_budgets(ctx),
        LaterOf(MaybeOf()),
        MaybeOf(LaterOf()),
        subject="predict_maybe_candidate",
    )
    return from_reports(
        "gwbeq_maybe_candidate",
        "gwbeq",
        [report],
        expect_pass=False,
        suggestion="No witness found; the candidate should disagree on delay(Nothing)",
    )


def _zero_all(s: Any) -> Any:
    return smap(lambda _: 0, s)


def _closure_check(ctx: CheckContext) -> CheckResult:
    """Two-out-of-three closure on compositions."""
    count = at_least(ctx, 100)
    seed, budgets = ctx.seed, context_budgets(ctx)
    streams = [StreamOf().lift(xs) for xs in int_lists(seed, count)]
    reports: List[Report] = [
        check_composition_closure(
            predict_reader,
            identity,
            suspended(seed, count, READER_CASE.sample),
            budgets,
            LaterOf(ReaderOf(GROUND, ENVS)),
            ReaderOf(LaterOf(), ENVS),
            ReaderOf(LaterOf(), ENVS),
            subject="id . predict_reader",
        ),
        check_composition_closure(
            delay,
            predict_later,
            suspended(seed, count, lambda rng: rng.randint(-9, 9)),
            budgets,
            LaterOf(),
            LaterOf(LaterOf()),
            LaterOf(LaterOf()),
            subject="predict_later . delay",
        ),
        check_composition_closure(
            _zero_all,
            identity,
            streams,
            budgets,
            StreamOf(),
            StreamOf(),
            StreamOf(),
            subject="id . zero_all",
        ),
    ]
    zeroing = reports[-1].details
    lockstep = zeroing.get("f") == zeroing.get("g.f")
    result = from_reports(
        "gwbeq_closure", "gwbeq", reports, extra={r.subject: r.details for r in reports}
    )
    if not lockstep:
        result.success = False
        result.message = "composite did not fail together with f"
    return result


gwbeq_predicts_check = Check(
    name="gwbeq_predicts",
    group="gwbeq",
    description="Every predict instance is a guarded weak bisimulation equivalence",
    run=timed(_predicts_check),
)

gwbeq_waits_check = Check(
    name="gwbeq_waits",
    group="gwbeq",
    description="Stable waits, including the one a pair predict implies",
    run=timed(_waits_check),
)

gwbeq_maybe_candidate_check = Check(
    name="gwbeq_maybe_candidate",
    group="gwbeq",
    description="The always-Just predict for Maybe is refuted",
    run=timed(_maybe_candidate_check),
    quick=True,
)

gwbeq_closure_check = Check(
    name="gwbeq_closure",
    group="gwbeq",
    description="Composition closure: any two of f, g, g.f decide the third",
    run=timed(_closure_check),
)
