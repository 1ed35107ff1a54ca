"""Named demos: small programs with a declared expected terminator."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

from .core import EXHAUSTED
from .data import (
    NOTHING,
    Bistream,
    Just,
    naturals,
    plast,
    pstream_of,
    repeat_forever,
    sinterleave,
    slast,
    szip,
    tabulate,
)
from .effects import (
    LIST,
    MAYBE,
    READER,
    ZIPLIST,
    Cont,
    Reader,
    Update,
    Writer,
    ZipList,
    ask,
    cont,
    get_state,
    head_action,
    put_action,
    update,
    update_bind,
    update_then,
    writer,
)
from .errors import UnknownDemoError
from .evaluation import (
    ContOf,
    DelayOf,
    MaybeOf,
    ObsBudget,
    Observation,
    PairOf,
    PStreamOf,
    ReaderOf,
    StreamOf,
    Terminator,
    leval,
    render,
)
from .monoids import DELAY_STABLE, DFIRST, DLAST, PSTREAM, dfirst, dlast
from .traversals import ibackquence, isequence_bistream, isequence_stream, observe_forced, transpose_infinite
from .types import DemoResult, DemoSpec

_ACTION = head_action(PSTREAM)
UPDATE = update(_ACTION)


@dataclass(frozen=True)
class Demo:
    name: str
    description: str
    expected: Terminator
    run: Callable[[DemoSpec], "Outcome"]


@dataclass
class Outcome:
    elements: List[Any]
    terminator: Terminator
    fuel_used: int
    extras: Dict[str, Any] = field(default_factory=dict)


def _seq(obs: Observation, **extras: Any) -> Outcome:
    result = obs.result
    if result is EXHAUSTED:
        return Outcome([], Terminator.EXHAUSTED, obs.fuel_used, extras)
    return Outcome([render(e) for e in result.elements], result.terminator, obs.fuel_used, extras)


def _scalar(obs: Observation, **extras: Any) -> Outcome:
    result = obs.result
    if result is EXHAUSTED:
        return Outcome([], Terminator.EXHAUSTED, obs.fuel_used, extras)
    if isinstance(result, Just):
        return Outcome([render(result.value)], Terminator.ENDED, obs.fuel_used, extras)
    if result is NOTHING:
        return Outcome([], Terminator.ENDED, obs.fuel_used, extras)
    return Outcome([render(result)], Terminator.ENDED, obs.fuel_used, extras)


def _budget(spec: DemoSpec) -> ObsBudget:
    return ObsBudget(spec.depth, spec.fuel)


def reader_repeat(spec: DemoSpec) -> Outcome:
    traversed = isequence_stream(repeat_forever(ask()), READER)
    obs = leval(traversed, ReaderOf(StreamOf(), (spec.env,)), _budget(spec))
    return _seq(Observation(obs.result.at(spec.env), obs.fuel_used, obs.budget))


def transducer_step() -> Update[Any, int, int]:
    """Read the state, write its successor, read again."""
    return update_bind(
        get_state(PSTREAM),
        lambda s: update_then(put_action(pstream_of(s + 1)), get_state(PSTREAM), _ACTION),
        _ACTION,
    )


def _run_update(u: Update[Any, int, Any], spec: DemoSpec) -> Outcome:
    log, values = u.run(spec.s0)
    budget = _budget(spec)
    value_obs = leval(values, StreamOf(), budget)
    log_obs = leval(log, PStreamOf(), budget)
    final = leval(plast(log), DelayOf(MaybeOf()), budget)
    outcome = _seq(value_obs, log=render(log_obs.result), final_state=render(final.result))
    outcome.fuel_used += log_obs.fuel_used + final.fuel_used
    return outcome


def state_transducer(spec: DemoSpec) -> Outcome:
    return _run_update(isequence_stream(repeat_forever(transducer_step()), UPDATE), spec)


def update_backward(spec: DemoSpec) -> Outcome:
    return _run_update(ibackquence(repeat_forever(transducer_step()), UPDATE), spec)


def _forced(items: Any, eff: Any) -> Callable[[DemoSpec], Outcome]:
    def run(spec: DemoSpec) -> Outcome:
        obs = observe_forced(repeat_forever(items), eff, spec.fuel)
        if obs.result is EXHAUSTED:
            return Outcome([], Terminator.EXHAUSTED, obs.fuel_used)
        return Outcome([render(obs.result.value)], Terminator.ENDED, obs.fuel_used)

    return run


def writer_pstream(spec: DemoSpec) -> Outcome:
    writes = tabulate(lambda n: Writer(n, pstream_of(n)))
    w = isequence_stream(writes, writer(PSTREAM))
    budget = _budget(spec)
    log = leval(w.log, PStreamOf(), budget)
    outcome = _seq(leval(w.value, StreamOf(), budget), log=render(log.result))
    outcome.fuel_used += log.fuel_used
    return outcome


def _first_writes() -> Any:
    return tabulate(lambda n: Writer(n, dfirst(n)))


def _last_writes() -> Any:
    return tabulate(lambda n: Writer(n, dlast(n)))


def _log_of(
    traverse: Callable[[Any, Any], Any], writes: Callable[[], Any], monoid: Any
) -> Callable[[DemoSpec], Outcome]:
    def run(spec: DemoSpec) -> Outcome:
        w = traverse(writes(), writer(monoid))
        return _scalar(leval(w.log.payload, DelayOf(MaybeOf()), _budget(spec)))

    return run


def bistream_mixed(spec: DemoSpec) -> Outcome:
    budget = _budget(spec)
    first = isequence_bistream(Bistream(_first_writes(), _first_writes()), writer(DFIRST))
    last = isequence_bistream(Bistream(_last_writes(), _last_writes()), writer(DLAST))
    first_log = leval(first.log.payload, DelayOf(MaybeOf()), budget)
    last_log = leval(last.log.payload, DelayOf(MaybeOf()), budget)
    outcome = _seq(
        leval(first.value.forward, StreamOf(), budget),
        dfirst_log=render(first_log.result),
        dlast_log=render(last_log.result),
    )
    outcome.fuel_used += first_log.fuel_used + last_log.fuel_used
    if first_log.partial or last_log.partial:
        outcome.terminator = Terminator.EXHAUSTED
    return outcome


def transpose(spec: DemoSpec) -> Outcome:
    rows = tabulate(lambda i: Reader(lambda j, i=i: (i, j)))
    columns = transpose_infinite(rows)
    obs = leval(columns.run(spec.env), StreamOf(PairOf()), _budget(spec))
    return _seq(obs)


def cont_diverges(spec: DemoSpec) -> Outcome:
    traversed = isequence_stream(repeat_forever(Cont(lambda k: k(1))), cont(DELAY_STABLE))
    obs = leval(traversed, ContOf(StreamOf()), _budget(spec))
    if obs.result is EXHAUSTED:
        return Outcome([], Terminator.EXHAUSTED, obs.fuel_used)
    return _seq(obs)


def interleave(spec: DemoSpec) -> Outcome:
    return _seq(leval(sinterleave(repeat_forever(1), repeat_forever(2)), StreamOf(), _budget(spec)))


def zip_naturals(spec: DemoSpec) -> Outcome:
    return _seq(leval(szip(repeat_forever(1), naturals()), StreamOf(PairOf()), _budget(spec)))


def slast_infinite(spec: DemoSpec) -> Outcome:
    return _scalar(leval(slast(repeat_forever(1)), DelayOf(MaybeOf()), _budget(spec)))


def _demos() -> Tuple[Demo, ...]:
    return (
        Demo("reader-repeat", "Traverse repeat(ask) at Reader and read it at --env",
             Terminator.TRUNCATED, reader_repeat),
        Demo("state-transducer", "Update with the head action: read s, write s+1, read",
             Terminator.TRUNCATED, state_transducer),
        Demo("update-backward", "The same transducer traversed back to front",
             Terminator.TRUNCATED, update_backward),
        Demo("maybe-diverges", "Forced sequence of repeat(Just 1) at Maybe",
             Terminator.EXHAUSTED, _forced(Just(1), MAYBE)),
        Demo("list-diverges", "Forced sequence of repeat([1, 2]) at List",
             Terminator.EXHAUSTED, _forced([1, 2], LIST)),
        Demo("ziplist-diverges", "Forced sequence of repeat(ZipList [1, 2])",
             Terminator.EXHAUSTED, _forced(ZipList((1, 2)), ZIPLIST)),
        Demo("writer-pstream", "Writer over PStream logs every traversed element",
             Terminator.TRUNCATED, writer_pstream),
        Demo("dfirst-prompt", "Writer[DFirst] log under the prompt traversal",
             Terminator.ENDED, _log_of(isequence_stream, _first_writes, DFIRST)),
        Demo("dfirst-coprompt", "Writer[DFirst] log under the backward traversal",
             Terminator.EXHAUSTED, _log_of(ibackquence, _first_writes, DFIRST)),
        Demo("dlast-coprompt", "Writer[DLast] log under the backward traversal",
             Terminator.ENDED, _log_of(ibackquence, _last_writes, DLAST)),
        Demo("dlast-prompt", "Writer[DLast] log under the prompt traversal",
             Terminator.EXHAUSTED, _log_of(isequence_stream, _last_writes, DLAST)),
        Demo("bistream-mixed", "Bistream traversal observes both DFirst and DLast logs",
             Terminator.TRUNCATED, bistream_mixed),
        Demo("transpose", "Column --env of the infinite matrix (i, j)",
             Terminator.TRUNCATED, transpose),
        Demo("cont-diverges", "Continuation traversal of an infinite stream",
             Terminator.EXHAUSTED, cont_diverges),
        Demo("interleave", "sinterleave(repeat 1, repeat 2)",
             Terminator.TRUNCATED, interleave),
        Demo("zip", "szip(repeat 1, naturals)",
             Terminator.TRUNCATED, zip_naturals),
        Demo("slast-infinite", "Last element of an infinite stream",
             Terminator.EXHAUSTED, slast_infinite),
    )


DEMOS: Dict[str, Demo] = {d.name: d for d in _demos()}


def get_demo(name: str) -> Demo:
    try:
        return DEMOS[name]
    except KeyError:
        raise UnknownDemoError(f"unknown demo {name!r}; available: {', '.join(sorted(DEMOS))}") from None


def exit_code(expected: Terminator, obtained: Terminator) -> int:
    if obtained is not expected:
        return 1
    return 2 if expected is Terminator.EXHAUSTED else 0


def run_demo(spec: DemoSpec) -> DemoResult:
    demo = get_demo(spec.name)
    outcome = demo.run(spec)
    return DemoResult(
        demo=demo.name,
        params=spec.params(),
        elements=outcome.elements,
        terminator=outcome.terminator.value,
        expected=demo.expected.value,
        fuel_used=outcome.fuel_used,
        extras=outcome.extras,
        exit_code=exit_code(demo.expected, outcome.terminator),
    )
