"""Evaluation checks: right inverse, budget monotonicity and the worked examples."""
import random
from typing import Any, Dict, List, Tuple

from ..core import EXHAUSTED, delay, lfix
from ..data import (
    NIL,
    Cons,
    Just,
    Now,
    Wait,
    naturals,
    repeat_forever,
    scycle,
    sinterleave,
    slast,
    smap,
    stream_of,
    szip,
    wait_n,
)
from ..evaluation import (
    GROUND,
    Carrier,
    DelayOf,
    Finding,
    ITreeOf,
    LaterOf,
    MaybeOf,
    ObsBudget,
    PairOf,
    PStreamOf,
    Report,
    Seq,
    StreamOf,
    Terminator,
    bisimilar,
    leval,
    llift,
)
from ..generators import delays, finite_itree, int_lists, pstreams
from ..types import Check, CheckContext, CheckResult
from .utilities import at_least, expectations, from_reports, timed

# Large enough for every generated fixture.
ROOMY = ObsBudget(depth=16, fuel=10_000)


def _fixtures(seed: int, count: int) -> List[Tuple[Any, Carrier]]:
    """Plain results paired with the carrier that lifts them."""
    rng = random.Random(seed)
    lists = int_lists(seed, count // 2)
    out: List[Tuple[Any, Carrier]] = []
    for xs in lists:
        out.append((Seq(tuple(xs), Terminator.ENDED), StreamOf()))
    for xs in lists[: count // 8]:
        out.append((Seq(tuple(xs), Terminator.ENDED), PStreamOf()))
    while len(out) < count * 3 // 4:
        tree = finite_itree(rng, lambda r: r.randint(-9, 9))
        out.append((leval(tree, ITreeOf(), ROOMY).result, ITreeOf()))
    pair = PairOf(GROUND, StreamOf())
    while len(out) < count * 7 // 8:
        xs = tuple(rng.randint(-9, 9) for _ in range(rng.randint(0, 4)))
        out.append(((rng.randint(-9, 9), Seq(xs, Terminator.ENDED)), pair))
    scalars = (GROUND, DelayOf(), LaterOf(), MaybeOf())
    while len(out) < count:
        carrier = rng.choice(scalars)
        value = rng.randint(-9, 9)
        out.append((Just(value) if isinstance(carrier, MaybeOf) else value, carrier))
    return out


def _right_inverse_check(ctx: CheckContext) -> CheckResult:
    """leval . llift is the identity on plain results."""
    fixtures = _fixtures(ctx.seed, at_least(ctx, 200))
    report = Report("right-inverse", "leval . llift", len(fixtures))
    for index, (r, carrier) in enumerate(fixtures):
        actual = leval(llift(r, carrier), carrier, ROOMY).result
        if actual != r:
            report.findings.append(Finding("right-inverse", index, ROOMY, r, actual))
    return from_reports(
        "eval_right_inverse", "eval", [report], suggestion="A carrier's lift and observe disagree"
    )


def extends_observation(small: Any, big: Any) -> bool:
    """Whether ``big`` refines ``small``: ⊥ anywhere in ``small`` may become a value."""
    if small is EXHAUSTED:
        return True
    if isinstance(small, Seq) and isinstance(big, Seq):
        n = len(small.elements)
        if len(big.elements) < n:
            return False
        if not all(extends_observation(a, b) for a, b in zip(small.elements, big.elements)):
            return False
        if small.terminator is Terminator.ENDED:
            return big.terminator is Terminator.ENDED and len(big.elements) == n
        return True
    if isinstance(small, tuple) and isinstance(big, tuple) and len(small) == len(big):
        return all(extends_observation(a, b) for a, b in zip(small, big))
    if isinstance(small, Just) and isinstance(big, Just):
        return extends_observation(small.value, big.value)
    return small == big


def _guarded_fixtures(seed: int, count: int) -> List[Tuple[Any, Carrier]]:
    lists = int_lists(seed, count // 4)
    out: List[Tuple[Any, Carrier]] = [(stream_of(*xs), StreamOf()) for xs in lists]
    out.extend((d, DelayOf()) for d in delays(seed, count // 4))
    out.extend((p, PStreamOf()) for p in pstreams(seed, count // 4))
    infinite = (
        (naturals(), StreamOf()),
        (repeat_forever(1), StreamOf()),
        (sinterleave(repeat_forever(1), repeat_forever(2)), StreamOf()),
        (szip(repeat_forever(1), naturals()), StreamOf(PairOf())),
        (slast(repeat_forever(1)), DelayOf(MaybeOf())),
        (smap(lambda n: wait_n(Now(n), n % 4), naturals()), StreamOf(DelayOf())),
    )
    while len(out) < count:
        out.extend(infinite)
    return out[:count]


def _monotonicity_check(ctx: CheckContext) -> CheckResult:
    """Doubling a budget only extends what an observation shows."""
    rng = random.Random(ctx.seed)
    fixtures = _guarded_fixtures(ctx.seed, at_least(ctx, 200))
    report = Report("monotonicity", "leval", len(fixtures))
    for index, (x, carrier) in enumerate(fixtures):
        budget = ObsBudget(rng.randint(0, 6), rng.randint(0, 8))
        small = leval(x, carrier, budget).result
        big = leval(x, carrier, budget.doubled()).result
        if not extends_observation(small, big):
            report.findings.append(Finding("monotonicity", index, budget, small, big))
    return from_reports("eval_monotonicity", "eval", [report])


def _examples_check(ctx: CheckContext) -> CheckResult:
    """Worked examples for Later, the stream combinators and leval."""
    ones, twos = repeat_forever(1), repeat_forever(2)
    observed: Dict[str, Any] = {
        "delay forced with fuel 1": leval(delay(5), LaterOf(), ObsBudget(0, 1)).result,
        "delay forced with fuel 0": leval(delay(5), LaterOf(), ObsBudget(0, 0)).result,
        "lfix cons prefix": leval(lfix(lambda l: Cons(1, l)), StreamOf(), ObsBudget(3, 10)).result,
        "lfix wait": leval(lfix(lambda l: Wait(l)), DelayOf(), ObsBudget(0, 1000)).result,
        "interleave prefix": leval(sinterleave(ones, twos), StreamOf(), ObsBudget(4, 10)).result,
        "interleave nil": leval(sinterleave(NIL, stream_of(1, 2)), StreamOf(), ROOMY).result,
        "zip prefix": leval(szip(ones, naturals()), StreamOf(PairOf()), ObsBudget(3, 10)).result,
        "slast finite": leval(slast(stream_of(1, 2, 3)), DelayOf(MaybeOf()), ObsBudget(0, 6)).result,
        "slast infinite": leval(slast(ones), DelayOf(MaybeOf()), ObsBudget(0, 1000)).result,
        "nested waits fuel 4": leval(Wait(delay(Wait(delay(Now(7))))), DelayOf(), ObsBudget(0, 4)).result,
        "nested waits fuel 1": leval(Wait(delay(Wait(delay(Now(7))))), DelayOf(), ObsBudget(0, 1)).result,
        "unrolled repeat": all(
            bisimilar(ones, Cons(1, delay(ones)), StreamOf(), budget=ObsBudget(k, 100)) for k in range(8)
        ),
        "ones against twos": bisimilar(ones, twos, StreamOf(), budget=ObsBudget(1, 10)),
        "cycle of one": bisimilar(ones, scycle([1]), StreamOf(), budget=ObsBudget(8, 100)),
    }
    expected = {
        "delay forced with fuel 1": 5,
        "delay forced with fuel 0": EXHAUSTED,
        "lfix cons prefix": Seq((1, 1, 1), Terminator.TRUNCATED),
        "lfix wait": EXHAUSTED,
        "interleave prefix": Seq((1, 2, 1, 2), Terminator.TRUNCATED),
        "interleave nil": Seq((1, 2), Terminator.ENDED),
        "zip prefix": Seq(((1, 0), (1, 1), (1, 2)), Terminator.TRUNCATED),
        "slast finite": Just(3),
        "slast infinite": EXHAUSTED,
        "nested waits fuel 4": 7,
        "nested waits fuel 1": EXHAUSTED,
        "unrolled repeat": True,
        "ones against twos": False,
        "cycle of one": True,
    }
    outcomes = {label: observed[label] == value for label, value in expected.items()}
    return expectations("eval_examples", "eval", outcomes, observed)


eval_right_inverse_check = Check(
    name="eval_right_inverse",
    group="eval",
    description="leval . llift is the identity on lists, trees, pairs and scalars",
    run=timed(_right_inverse_check),
)

eval_monotonicity_check = Check(
    name="eval_monotonicity",
    group="eval",
    description="Observations at doubled budgets extend the original ones",
    run=timed(_monotonicity_check),
)

eval_examples_check = Check(
    name="eval_examples",
    group="eval",
    description="Worked examples for Later, streams and leval",
    run=timed(_examples_check),
    quick=True,
)
