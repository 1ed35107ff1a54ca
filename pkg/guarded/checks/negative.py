"""Nonexamples: effects and observations that never become productive."""
from typing import Any, Dict

from ..core import EXHAUSTED
from ..data import NOTHING, Just, plast, repeat_forever
from ..demos import UPDATE, transducer_step
from ..effects import LIST, MAYBE, ZIPLIST, Cont, ZipList, cont
from ..errors import GuardednessError
from ..evaluation import ContOf, DelayOf, MaybeOf, ObsBudget, StreamOf, leval
from ..monoids import DELAY_STABLE
from ..traversals import isequence_stream, sequence_forced, sequence_list_oracle
from ..types import Check, CheckContext, CheckResult
from .utilities import expectations, timed

FUELS = (10, 100, 1000)


def _forced_check(ctx: CheckContext) -> CheckResult:
    """Maybe, List and ZipList only sequence by forcing the whole stream."""
    inputs = {"Maybe": (Just(1), MAYBE), "List": ([1, 2], LIST), "ZipList": (ZipList((1, 2)), ZIPLIST)}
    observed: Dict[str, Any] = {}
    outcomes: Dict[str, bool] = {}
    for name, (item, eff) in inputs.items():
        results = [sequence_forced(repeat_forever(item), eff, fuel) for fuel in FUELS]
        observed[f"{name} infinite"] = dict(zip(FUELS, results))
        outcomes[f"{name} infinite"] = all(r is EXHAUSTED for r in results)
        try:
            isequence_stream(repeat_forever(item), eff)
        except GuardednessError as e:
            observed[f"{name} refused"] = str(e)
            outcomes[f"{name} refused"] = True
        else:
            observed[f"{name} refused"] = "traversal was accepted"
            outcomes[f"{name} refused"] = False

    observed["Maybe finite"] = sequence_list_oracle([Just(1), Just(2)], MAYBE)
    observed["Maybe with Nothing"] = sequence_list_oracle([Just(1), NOTHING], MAYBE)
    outcomes["Maybe finite"] = observed["Maybe finite"] == Just([1, 2])
    outcomes["Maybe with Nothing"] = observed["Maybe with Nothing"] is NOTHING
    return expectations("negative_forced", "negative", outcomes, observed)


def _bottoms_check(ctx: CheckContext) -> CheckResult:
    """Cont traversals and the final state of an infinite update are ⊥."""
    traversed = isequence_stream(repeat_forever(Cont(lambda k: k(1))), cont(DELAY_STABLE))
    log, _ = isequence_stream(repeat_forever(transducer_step()), UPDATE).run(0)
    observed: Dict[str, Any] = {
        "Cont traversal": {
            fuel: leval(traversed, ContOf(StreamOf()), ObsBudget(ctx.depth, fuel)).result for fuel in FUELS
        },
        "Update final state": {
            fuel: leval(plast(log), DelayOf(MaybeOf()), ObsBudget(ctx.depth, fuel)).result for fuel in FUELS
        },
    }
    outcomes = {label: all(r is EXHAUSTED for r in by_fuel.values()) for label, by_fuel in observed.items()}
    return expectations("negative_bottoms", "negative", outcomes, observed)


negative_forced_check = Check(
    name="negative_forced",
    group="negative",
    description="repeat(Just 1), repeat([1, 2]) and repeat(ZipList) never finish sequencing",
    run=timed(_forced_check),
    quick=True,
)

negative_bottoms_check = Check(
    name="negative_bottoms",
    group="negative",
    description="Cont traversals and the final update state are ⊥ at every fuel",
    run=timed(_bottoms_check),
    quick=True,
)
