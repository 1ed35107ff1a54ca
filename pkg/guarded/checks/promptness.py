"""Promptness: which traversal order lets a biased monoid's log be observed."""
from typing import Any, Callable, Dict

from ..core import EXHAUSTED
from ..data import Bistream, Just, tabulate
from ..effects import Writer, writer
from ..evaluation import DelayOf, MaybeOf, ObsBudget, leval
from ..monoids import DFIRST, DLAST, dfirst, dlast
from ..traversals import ibackquence, isequence_bistream, isequence_stream
from ..types import Check, CheckContext, CheckResult
from .utilities import expectations, timed


def _writes(unit: Callable[[int], Any]) -> Any:
    return tabulate(lambda n: Writer(n, unit(n)))


def _log(traversed: Writer[Any, Any], fuel: int) -> Any:
    return leval(traversed.log.payload, DelayOf(MaybeOf()), ObsBudget(0, fuel)).result


def _promptness_check(ctx: CheckContext) -> CheckResult:
    """DFirst needs the prompt order, DLast the backward one, Bistream has both."""
    fuel = ctx.fuel
    first, last = writer(DFIRST), writer(DLAST)
    observed: Dict[str, Any] = {
        "dfirst forward": _log(isequence_stream(_writes(dfirst), first), fuel),
        "dfirst backward": _log(ibackquence(_writes(dfirst), first), fuel),
        "dlast forward": _log(isequence_stream(_writes(dlast), last), fuel),
        "dlast backward": _log(ibackquence(_writes(dlast), last), fuel),
        "bistream dfirst": _log(
            isequence_bistream(Bistream(_writes(dfirst), _writes(dfirst)), first), fuel
        ),
        "bistream dlast": _log(isequence_bistream(Bistream(_writes(dlast), _writes(dlast)), last), fuel),
    }
    outcomes = {
        "dfirst forward": observed["dfirst forward"] == Just(0),
        "dfirst backward": observed["dfirst backward"] is EXHAUSTED,
        "dlast forward": observed["dlast forward"] is EXHAUSTED,
        "dlast backward": observed["dlast backward"] == Just(0),
        "bistream dfirst": observed["bistream dfirst"] == Just(0),
        "bistream dlast": observed["bistream dlast"] == Just(0),
    }
    return expectations("promptness", "promptness", outcomes, observed)


promptness_check = Check(
    name="promptness",
    group="promptness",
    description="Writer[DFirst] and Writer[DLast] logs under forward, backward and bistream traversals",
    run=timed(_promptness_check),
    quick=True,
)
