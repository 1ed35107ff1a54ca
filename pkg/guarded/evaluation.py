"""Bisimilarity by evaluation.

This is the only module holding the forcing capability. Every guarded type
gets a :class:`Carrier` that knows how to observe a value of that type under
an :class:`ObsBudget` (``leval``), how to re-embed a plain result
(``llift``), and how to pad a value with extra delay for invariance checks.

Observations are plain, finite Python values:

* list-like results are :class:`Seq` with a :class:`Terminator`;
* trees are :class:`Leaf` / :class:`Branch`, with markers at cut points;
* functions, readers and updates are :class:`Probed` tables;
* scalars are the value itself or :data:`~guarded.core.EXHAUSTED`.
"""
from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from toolz import identity

from .core import EXHAUSTED, Exhausted, Fuel, Later, Partial, Value, _issue_capability, delay, force
from .data import (
    NIL,
    NOTHING,
    PNIL,
    Bistream,
    Cons,
    Delay,
    Direction,
    ILeaf,
    ITBranch,
    ITree,
    Just,
    Now,
    Path,
    PCons,
    PStream,
    PWait,
    Stream,
    Wait,
    pstream_of,
    smap,
    stream_of,
    wait_n,
)
from .effects import Compose, ConstPair, Cont, Identity, Op, Prod, Reader, Update, Writer
from .errors import BudgetError
from .monoids import DFirst, DLast, dfirst_wait, dlast_wait

_CAPABILITY = _issue_capability()


class _OutOfFuel(Exception):
    """Unwinds an observation to the nearest position that can record ⊥."""


@dataclass(frozen=True)
class ObsBudget:
    depth: int
    fuel: int

    def __post_init__(self) -> None:
        if self.depth < 0 or self.fuel < 0:
            raise BudgetError(f"budget must be non-negative, got depth={self.depth} fuel={self.fuel}")

    def doubled(self) -> "ObsBudget":
        return ObsBudget(self.depth * 2, self.fuel * 2)


# Budget used when a function result has to be re-lifted through its argument.
LIFT_BUDGET = ObsBudget(depth=64, fuel=10_000)


class Terminator(enum.Enum):
    ENDED = "ended"
    TRUNCATED = "truncated"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Seq:
    elements: Tuple[Any, ...]
    terminator: Terminator


@dataclass(frozen=True)
class Leaf:
    value: Any


@dataclass(frozen=True)
class Branch:
    left: Any
    right: Any


@dataclass(frozen=True)
class Probed:
    """A function observed at a fixed set of probes."""

    table: Tuple[Tuple[Any, Any], ...]

    def at(self, probe: Any) -> Any:
        for p, result in self.table:
            if p == probe:
                return result
        raise KeyError(probe)


@dataclass(frozen=True)
class Probe:
    """A named callable probe, so probe tables stay readable in reports."""

    label: str
    fn: Callable[..., Any] = field(compare=False)

    def __call__(self, *args: Any) -> Any:
        return self.fn(*args)

    def __repr__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Observation:
    result: Any
    fuel_used: int
    budget: ObsBudget

    @property
    def partial(self) -> bool:
        return contains_exhausted(self.result)


class Meter:
    """Fuel and depth threaded through a single observation."""

    def __init__(self, budget: ObsBudget) -> None:
        self.budget = budget
        self.depth = budget.depth
        self._fuel = Fuel(budget.fuel)

    @property
    def used(self) -> int:
        return self.budget.fuel - self._fuel.budget

    def strip(self, x: Later[Any]) -> Any:
        value, self._fuel = force(x, self._fuel, _CAPABILITY)
        if isinstance(value, Exhausted):
            raise _OutOfFuel()
        return value.value


def contains_exhausted(result: Any) -> bool:
    stack = [result]
    while stack:
        item = stack.pop()
        if item is EXHAUSTED or item is Terminator.EXHAUSTED:
            return True
        if isinstance(item, Seq):
            if item.terminator is Terminator.EXHAUSTED:
                return True
            stack.extend(item.elements)
        elif isinstance(item, Branch):
            stack.extend((item.left, item.right))
        elif isinstance(item, (Leaf, Just)):
            stack.append(item.value)
        elif isinstance(item, Probed):
            stack.extend(r for _, r in item.table)
        elif isinstance(item, tuple):
            stack.extend(item)
    return False


# Carriers

class Carrier(ABC):
    """Observation, lifting and padding for one guarded type."""

    name: str = "carrier"

    @abstractmethod
    def observe(self, x: Any, meter: Meter) -> Any:
        """Observe ``x``; may raise ``_OutOfFuel``."""

    def evaluate(self, x: Any, meter: Meter) -> Any:
        try:
            return self.observe(x, meter)
        except _OutOfFuel:
            return EXHAUSTED

    @abstractmethod
    def lift(self, r: Any) -> Any:
        ...

    def pad(self, x: Any, layers: int) -> Any:
        raise NotImplementedError(f"{self.name} has no delay padding")

    def __repr__(self) -> str:
        return self.name


class Ground(Carrier):
    name = "Ground"

    def observe(self, x: Any, meter: Meter) -> Any:
        return x

    def lift(self, r: Any) -> Any:
        return r

    def pad(self, x: Any, layers: int) -> Any:
        return x


GROUND = Ground()


class LaterOf(Carrier):
    def __init__(self, inner: Carrier = GROUND) -> None:
        self.inner = inner
        self.name = f"Later[{inner.name}]"

    def observe(self, x: Later[Any], meter: Meter) -> Any:
        return self.inner.observe(meter.strip(x), meter)

    def lift(self, r: Any) -> Later[Any]:
        return delay(self.inner.lift(r))

    def pad(self, x: Later[Any], layers: int) -> Later[Any]:
        inner = self.inner
        return x.map(lambda v: inner.pad(v, layers))


class PairOf(Carrier):
    def __init__(self, first: Carrier = GROUND, second: Carrier = GROUND) -> None:
        self.first, self.second = first, second
        self.name = f"({first.name}, {second.name})"

    def observe(self, x: Tuple[Any, Any], meter: Meter) -> Tuple[Any, Any]:
        return self.first.evaluate(x[0], meter), self.second.evaluate(x[1], meter)

    def lift(self, r: Tuple[Any, Any]) -> Tuple[Any, Any]:
        return self.first.lift(r[0]), self.second.lift(r[1])

    def pad(self, x: Tuple[Any, Any], layers: int) -> Tuple[Any, Any]:
        return self.first.pad(x[0], layers), self.second.pad(x[1], layers)


def _elements(r: Any) -> Sequence[Any]:
    return r.elements if isinstance(r, Seq) else tuple(r)


class StreamOf(Carrier):
    def __init__(self, element: Carrier = GROUND) -> None:
        self.element = element
        self.name = f"Stream[{element.name}]"

    def observe(self, s: Stream[Any], meter: Meter) -> Seq:
        out: List[Any] = []
        while len(out) < meter.depth:
            if not isinstance(s, Cons):
                return Seq(tuple(out), Terminator.ENDED)
            out.append(self.element.evaluate(s.head, meter))
            try:
                s = meter.strip(s.tail)
            except _OutOfFuel:
                return Seq(tuple(out), Terminator.EXHAUSTED)
        return Seq(tuple(out), Terminator.TRUNCATED if isinstance(s, Cons) else Terminator.ENDED)

    def lift(self, r: Any) -> Stream[Any]:
        return stream_of(*(self.element.lift(e) for e in _elements(r)))

    def pad(self, s: Stream[Any], layers: int) -> Stream[Any]:
        element = self.element
        return smap(lambda e: element.pad(e, layers), s)


class ListOf(Carrier):
    """Finite Python lists, observed with the same result shape as streams."""

    def __init__(self, element: Carrier = GROUND) -> None:
        self.element = element
        self.name = f"List[{element.name}]"

    def observe(self, xs: Sequence[Any], meter: Meter) -> Seq:
        shown = [self.element.evaluate(x, meter) for x in list(xs)[: meter.depth]]
        terminator = Terminator.TRUNCATED if len(xs) > meter.depth else Terminator.ENDED
        return Seq(tuple(shown), terminator)

    def lift(self, r: Any) -> List[Any]:
        return [self.element.lift(e) for e in _elements(r)]

    def pad(self, xs: Sequence[Any], layers: int) -> List[Any]:
        return [self.element.pad(x, layers) for x in xs]


class DelayOf(Carrier):
    def __init__(self, inner: Carrier = GROUND) -> None:
        self.inner = inner
        self.name = f"Delay[{inner.name}]"

    def observe(self, d: Delay[Any], meter: Meter) -> Any:
        while isinstance(d, Wait):
            d = meter.strip(d.later)
        return self.inner.observe(d.value, meter)

    def lift(self, r: Any) -> Delay[Any]:
        return Now(self.inner.lift(r))

    def pad(self, d: Delay[Any], layers: int) -> Delay[Any]:
        return wait_n(d, layers)


class PStreamOf(Carrier):
    def __init__(self, element: Carrier = GROUND) -> None:
        self.element = element
        self.name = f"PStream[{element.name}]"

    def observe(self, p: PStream[Any], meter: Meter) -> Seq:
        out: List[Any] = []
        while len(out) < meter.depth:
            if isinstance(p, PCons):
                out.append(self.element.evaluate(p.head, meter))
                p = p.tail
            elif isinstance(p, PWait):
                try:
                    p = meter.strip(p.later)
                except _OutOfFuel:
                    return Seq(tuple(out), Terminator.EXHAUSTED)
            else:
                return Seq(tuple(out), Terminator.ENDED)
        return Seq(tuple(out), Terminator.ENDED if p is PNIL else Terminator.TRUNCATED)

    def lift(self, r: Any) -> PStream[Any]:
        return pstream_of(*(self.element.lift(e) for e in _elements(r)))

    def pad(self, p: PStream[Any], layers: int) -> PStream[Any]:
        for _ in range(layers):
            p = PWait(delay(p))
        return p


class ITreeOf(Carrier):
    def __init__(self, element: Carrier = GROUND) -> None:
        self.element = element
        self.name = f"ITree[{element.name}]"

    def observe(self, t: ITree[Any], meter: Meter) -> Any:
        return self._node(t, meter, meter.depth)

    def _node(self, t: ITree[Any], meter: Meter, remaining: int) -> Any:
        if isinstance(t, ILeaf):
            return Leaf(self.element.evaluate(t.value, meter))
        if remaining == 0:
            return Terminator.TRUNCATED
        return Branch(
            self._child(t.left, meter, remaining - 1),
            self._child(t.right, meter, remaining - 1),
        )

    def _child(self, later: Later[ITree[Any]], meter: Meter, remaining: int) -> Any:
        try:
            node = meter.strip(later)
        except _OutOfFuel:
            return EXHAUSTED
        return self._node(node, meter, remaining)

    def lift(self, r: Any) -> ITree[Any]:
        if isinstance(r, Leaf):
            return ILeaf(self.element.lift(r.value))
        if isinstance(r, Branch):
            return ITBranch(delay(self.lift(r.left)), delay(self.lift(r.right)))
        raise ValueError(f"cannot lift a cut tree marker {r!r}")


class BistreamOf(Carrier):
    def __init__(self, element: Carrier = GROUND) -> None:
        self.stream = StreamOf(element)
        self.name = f"Bistream[{element.name}]"

    def observe(self, b: Bistream[Any], meter: Meter) -> Tuple[Seq, Seq]:
        return self.stream.observe(b.forward, meter), self.stream.observe(b.backward, meter)

    def lift(self, r: Tuple[Any, Any]) -> Bistream[Any]:
        return Bistream(self.stream.lift(r[0]), self.stream.lift(r[1]))

    def pad(self, b: Bistream[Any], layers: int) -> Bistream[Any]:
        return Bistream(self.stream.pad(b.forward, layers), self.stream.pad(b.backward, layers))


class MaybeOf(Carrier):
    def __init__(self, inner: Carrier = GROUND) -> None:
        self.inner = inner
        self.name = f"Maybe[{inner.name}]"

    def observe(self, m: Any, meter: Meter) -> Any:
        if isinstance(m, Just):
            return Just(self.inner.evaluate(m.value, meter))
        return NOTHING

    def lift(self, r: Any) -> Any:
        return Just(self.inner.lift(r.value)) if isinstance(r, Just) else NOTHING

    def pad(self, m: Any, layers: int) -> Any:
        return Just(self.inner.pad(m.value, layers)) if isinstance(m, Just) else NOTHING


class DFirstOf(Carrier):
    def __init__(self, inner: Carrier = GROUND) -> None:
        self.payload = DelayOf(MaybeOf(inner))
        self.name = f"DFirst[{inner.name}]"

    def observe(self, x: DFirst[Any], meter: Meter) -> Any:
        return self.payload.observe(x.payload, meter)

    def lift(self, r: Any) -> DFirst[Any]:
        return DFirst(self.payload.lift(r))

    def pad(self, x: DFirst[Any], layers: int) -> DFirst[Any]:
        for _ in range(layers):
            x = dfirst_wait(delay(x))
        return x


class DLastOf(Carrier):
    def __init__(self, inner: Carrier = GROUND) -> None:
        self.payload = DelayOf(MaybeOf(inner))
        self.name = f"DLast[{inner.name}]"

    def observe(self, x: DLast[Any], meter: Meter) -> Any:
        return self.payload.observe(x.payload, meter)

    def lift(self, r: Any) -> DLast[Any]:
        return DLast(self.payload.lift(r))

    def pad(self, x: DLast[Any], layers: int) -> DLast[Any]:
        for _ in range(layers):
            x = dlast_wait(delay(x))
        return x


class FunctionOf(Carrier):
    """``leval f = leval . f . llift``, observed at ``probes`` (argument results)."""

    def __init__(self, arg: Carrier, res: Carrier, probes: Sequence[Any]) -> None:
        self.arg, self.res = arg, res
        self.probes = tuple(probes)
        self.name = f"{arg.name} -> {res.name}"

    def _run(self, f: Any) -> Callable[[Any], Any]:
        return f

    def _wrap(self, f: Callable[[Any], Any]) -> Any:
        return f

    def observe(self, f: Any, meter: Meter) -> Probed:
        run = self._run(f)
        return Probed(tuple((p, self.res.evaluate(run(self.arg.lift(p)), meter)) for p in self.probes))

    def lift(self, r: Callable[[Any], Any]) -> Any:
        arg, res = self.arg, self.res
        return self._wrap(lambda x: res.lift(r(arg.evaluate(x, Meter(LIFT_BUDGET)))))


class OpOf(FunctionOf):
    """The contravariant ``Op`` wrapper around a function carrier."""

    def __init__(self, arg: Carrier, res: Carrier, probes: Sequence[Any]) -> None:
        super().__init__(arg, res, probes)
        self.name = f"Op[{arg.name}, {res.name}]"

    def _run(self, f: Op[Any, Any]) -> Callable[[Any], Any]:
        return f.run

    def _wrap(self, f: Callable[[Any], Any]) -> Op[Any, Any]:
        return Op(f)


class IdentityOf(Carrier):
    def __init__(self, inner: Carrier = GROUND) -> None:
        self.inner = inner
        self.name = f"Identity[{inner.name}]"

    def observe(self, x: Identity[Any], meter: Meter) -> Any:
        return self.inner.observe(x.value, meter)

    def lift(self, r: Any) -> Identity[Any]:
        return Identity(self.inner.lift(r))

    def pad(self, x: Identity[Any], layers: int) -> Identity[Any]:
        return Identity(self.inner.pad(x.value, layers))


class ReaderOf(Carrier):
    def __init__(self, value: Carrier, envs: Sequence[Any]) -> None:
        self.value = value
        self.envs = tuple(envs)
        self.name = f"Reader[{value.name}]"

    def observe(self, x: Reader[Any, Any], meter: Meter) -> Probed:
        return Probed(tuple((e, self.value.evaluate(x.run(e), meter)) for e in self.envs))

    def lift(self, r: Any) -> Reader[Any, Any]:
        value = self.value
        if isinstance(r, Probed):
            return Reader(lambda e: value.lift(r.at(e)))
        return Reader(lambda e: value.lift(r(e)))

    def pad(self, x: Reader[Any, Any], layers: int) -> Reader[Any, Any]:
        value = self.value
        return Reader(lambda e: value.pad(x.run(e), layers))


class WriterOf(Carrier):
    def __init__(self, value: Carrier, log: Carrier) -> None:
        self.value, self.log = value, log
        self.name = f"Writer[{log.name}, {value.name}]"

    def observe(self, w: Writer[Any, Any], meter: Meter) -> Tuple[Any, Any]:
        return self.value.evaluate(w.value, meter), self.log.evaluate(w.log, meter)

    def lift(self, r: Tuple[Any, Any]) -> Writer[Any, Any]:
        return Writer(self.value.lift(r[0]), self.log.lift(r[1]))

    def pad(self, w: Writer[Any, Any], layers: int) -> Writer[Any, Any]:
        return Writer(self.value.pad(w.value, layers), self.log.pad(w.log, layers))


class UpdateOf(Carrier):
    """Updates run at sample states; each state gives ``(log, value)``."""

    def __init__(self, value: Carrier, log: Carrier, states: Sequence[Any]) -> None:
        self.value, self.log = value, log
        self.states = tuple(states)
        self.name = f"Update[{log.name}, {value.name}]"

    def observe(self, u: Update[Any, Any, Any], meter: Meter) -> Probed:
        table = []
        for s in self.states:
            p, a = u.run(s)
            table.append((s, (self.log.evaluate(p, meter), self.value.evaluate(a, meter))))
        return Probed(tuple(table))

    def lift(self, r: Any) -> Update[Any, Any, Any]:
        log, value = self.log, self.value
        at = r.at if isinstance(r, Probed) else r

        def run(s: Any) -> Tuple[Any, Any]:
            p, a = at(s)
            return log.lift(p), value.lift(a)

        return Update(run)

    def pad(self, u: Update[Any, Any, Any], layers: int) -> Update[Any, Any, Any]:
        log, value = self.log, self.value

        def run(s: Any) -> Tuple[Any, Any]:
            p, a = u.run(s)
            return log.pad(p, layers), value.pad(a, layers)

        return Update(run)


class ContOf(Carrier):
    """Continuations into ``Delay``, run against a fixed terminal continuation."""

    def __init__(self, value: Carrier, terminal: Callable[[Any], Delay[Any]] = Now) -> None:
        self.answer = DelayOf(value)
        self.value = value
        self.terminal = terminal
        self.name = f"Cont[{value.name}]"

    def observe(self, c: Cont[Any, Any], meter: Meter) -> Any:
        return self.answer.observe(c.run(self.terminal), meter)

    def lift(self, r: Any) -> Cont[Any, Any]:
        a = self.value.lift(r)
        return Cont(lambda k: k(a))

    def pad(self, c: Cont[Any, Any], layers: int) -> Cont[Any, Any]:
        return Cont(lambda k: wait_n(c.run(k), layers))


class ProdOf(Carrier):
    def __init__(self, first: Carrier, second: Carrier) -> None:
        self.first, self.second = first, second
        self.name = f"Prod[{first.name}, {second.name}]"

    def observe(self, x: Prod[Any], meter: Meter) -> Tuple[Any, Any]:
        return self.first.evaluate(x.first, meter), self.second.evaluate(x.second, meter)

    def lift(self, r: Tuple[Any, Any]) -> Prod[Any]:
        return Prod(self.first.lift(r[0]), self.second.lift(r[1]))

    def pad(self, x: Prod[Any], layers: int) -> Prod[Any]:
        return Prod(self.first.pad(x.first, layers), self.second.pad(x.second, layers))


class ComposeOf(Carrier):
    def __init__(self, nested: Carrier) -> None:
        self.nested = nested
        self.name = f"Compose[{nested.name}]"

    def observe(self, x: Compose[Any], meter: Meter) -> Any:
        return self.nested.observe(x.run, meter)

    def lift(self, r: Any) -> Compose[Any]:
        return Compose(self.nested.lift(r))

    def pad(self, x: Compose[Any], layers: int) -> Compose[Any]:
        return Compose(self.nested.pad(x.run, layers))


class ConstPairOf(Carrier):
    def __init__(self, const: Carrier, value: Carrier) -> None:
        self.const, self.value = const, value
        self.name = f"ConstPair[{const.name}, {value.name}]"

    def observe(self, x: ConstPair[Any, Any], meter: Meter) -> Tuple[Any, Any]:
        return self.const.evaluate(x.c, meter), self.value.evaluate(x.a, meter)

    def lift(self, r: Tuple[Any, Any]) -> ConstPair[Any, Any]:
        return ConstPair(self.const.lift(r[0]), self.value.lift(r[1]))

    def pad(self, x: ConstPair[Any, Any], layers: int) -> ConstPair[Any, Any]:
        return ConstPair(self.const.pad(x.c, layers), self.value.pad(x.a, layers))


# Evaluation entry points

def leval(x: Any, carrier: Carrier, budget: ObsBudget) -> Observation:
    meter = Meter(budget)
    result = carrier.evaluate(x, meter)
    return Observation(result, meter.used, budget)


def llift(r: Any, carrier: Carrier) -> Any:
    return carrier.lift(r)


def bisimilar(
    x: Any,
    y: Any,
    carrier_x: Carrier,
    carrier_y: Optional[Carrier] = None,
    budget: ObsBudget = ObsBudget(8, 2000),
    iso: Callable[[Any], Any] = identity,
) -> bool:
    """Whether ``iso(leval x)`` equals ``leval y``; ⊥ matches ⊥ at the same position."""
    left = iso(leval(x, carrier_x, budget).result)
    right = leval(y, carrier_y or carrier_x, budget).result
    return bool(left == right)


def spine_observation(s: Stream[Any], fuel: int, depth: Optional[int] = None) -> Observation:
    """Force the spine only; the result is a Seq of unobserved elements."""
    meter = Meter(ObsBudget(0, fuel))
    out: List[Any] = []
    terminator = Terminator.ENDED
    while isinstance(s, Cons):
        if depth is not None and len(out) >= depth:
            terminator = Terminator.TRUNCATED
            break
        out.append(s.head)
        try:
            s = meter.strip(s.tail)
        except _OutOfFuel:
            terminator = Terminator.EXHAUSTED
            break
    return Observation(Seq(tuple(out), terminator), meter.used, meter.budget)


def stream_spine(s: Stream[Any], fuel: int, depth: Optional[int] = None) -> Tuple[Tuple[Any, ...], Terminator]:
    spine = spine_observation(s, fuel, depth).result
    return spine.elements, spine.terminator


def nth(s: Stream[Any], i: int, fuel: int) -> Partial[Any]:
    """The element at index ``i``, or ⊥ if the stream ends or fuel runs out first."""
    elements, _ = stream_spine(s, fuel, depth=i + 1)
    if len(elements) > i:
        return Value(elements[i])
    return EXHAUSTED


def delay_depth(d: Delay[Any], fuel: int) -> Partial[int]:
    """Number of ``Wait`` layers in front of ``Now``."""
    meter = Meter(ObsBudget(0, fuel))
    layers = 0
    try:
        while isinstance(d, Wait):
            d = meter.strip(d.later)
            layers += 1
    except _OutOfFuel:
        return EXHAUSTED
    return Value(layers)


def subtree(t: ITree[Any], path: Path, fuel: int) -> Partial[ITree[Any]]:
    """The node reached by following ``path``; a leaf stops the walk early."""
    meter = Meter(ObsBudget(0, fuel))
    try:
        for step in path:
            if isinstance(t, ILeaf):
                return EXHAUSTED
            t = meter.strip(t.left if step is Direction.L else t.right)
    except _OutOfFuel:
        return EXHAUSTED
    return Value(t)


# Reports

@dataclass(frozen=True)
class Finding:
    check: str
    sample_index: int
    budget: Optional[ObsBudget]
    expected: Any
    actual: Any


@dataclass
class Report:
    check: str
    subject: str
    samples: int = 0
    findings: List[Finding] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    probes: Tuple[Any, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.findings

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "subject": self.subject,
            "samples": self.samples,
            "passed": self.passed,
            "findings": [render(f) for f in self.findings],
            "details": render(self.details),
            "probes": render(self.probes),
        }


def render(value: Any) -> Any:
    """JSON-ready form of an observation; ⊥ is rendered as the string ``"⊥"``."""
    if value is EXHAUSTED:
        return "⊥"
    if isinstance(value, Terminator):
        return value.value
    if value is NOTHING:
        return None
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, Seq):
        return {"elements": [render(e) for e in value.elements], "terminator": value.terminator.value}
    if isinstance(value, Just):
        return {"just": render(value.value)}
    if isinstance(value, Leaf):
        return {"leaf": render(value.value)}
    if isinstance(value, Branch):
        return {"branch": [render(value.left), render(value.right)]}
    if isinstance(value, Probed):
        return [[render(p), render(r)] for p, r in value.table]
    if isinstance(value, ObsBudget):
        return {"depth": value.depth, "fuel": value.fuel}
    if isinstance(value, Finding):
        return {
            "check": value.check,
            "sample_index": value.sample_index,
            "budget": render(value.budget),
            "expected": render(value.expected),
            "actual": render(value.actual),
        }
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return repr(value)


def draw_samples(samples: Iterable[Any], check: str) -> Tuple[List[Any], List[Finding]]:
    """Materialize samples; a generator that raises becomes a finding."""
    drawn: List[Any] = []
    iterator = iter(samples)
    while True:
        try:
            drawn.append(next(iterator))
        except StopIteration:
            return drawn, []
        except Exception as e:
            return drawn, [Finding(check, len(drawn), None, "a sample", f"generator raised: {e!r}")]


def check_gwbeq(
    f: Callable[[Any], Any],
    samples: Iterable[Any],
    budgets: Sequence[ObsBudget],
    c_in: Carrier,
    c_out: Optional[Carrier] = None,
    iso: Callable[[Any], Any] = identity,
    subject: str = "",
    check: str = "gwbeq",
) -> Report:
    """Check that ``f`` sends every sample to an evaluated-bisimilar value."""
    c_out = c_out or c_in
    drawn, findings = draw_samples(samples, check)
    report = Report(check, subject or getattr(f, "__name__", repr(f)), len(drawn), findings)
    report.probes = _probes_of(c_in) + _probes_of(c_out)
    for index, x in enumerate(drawn):
        for budget in budgets:
            expected = iso(leval(x, c_in, budget).result)
            try:
                actual = leval(f(x), c_out, budget).result
            except Exception as e:
                report.findings.append(Finding(check, index, budget, expected, f"raised: {e!r}"))
                break
            if expected != actual:
                report.findings.append(Finding(check, index, budget, expected, actual))
    return report


def _probes_of(carrier: Carrier) -> Tuple[Any, ...]:
    for attr in ("probes", "envs", "states"):
        found = getattr(carrier, attr, None)
        if found:
            return tuple(found)
    return ()


def check_composition_closure(
    f: Callable[[Any], Any],
    g: Callable[[Any], Any],
    samples: Iterable[Any],
    budgets: Sequence[ObsBudget],
    c_in: Carrier,
    c_mid: Carrier,
    c_out: Carrier,
    iso_f: Callable[[Any], Any] = identity,
    iso_g: Callable[[Any], Any] = identity,
    subject: str = "",
) -> Report:
    """Two out of three: if any two of ``f``, ``g``, ``g . f`` are gwbeq, so is the third."""
    drawn, findings = draw_samples(samples, "closure")
    report = Report("closure", subject or "g . f", len(drawn), findings)
    if findings:
        return report
    try:
        mids = [f(x) for x in drawn]
    except Exception as e:
        report.findings.append(Finding("closure", 0, None, "f applies", f"raised: {e!r}"))
        return report

    def composite(x: Any) -> Any:
        return g(f(x))

    status = {
        "f": check_gwbeq(f, drawn, budgets, c_in, c_mid, iso_f, check="closure/f").passed,
        "g": check_gwbeq(g, mids, budgets, c_mid, c_out, iso_g, check="closure/g").passed,
        "g.f": check_gwbeq(
            composite, drawn, budgets, c_in, c_out, lambda r: iso_g(iso_f(r)), check="closure/g.f"
        ).passed,
    }
    report.details = status
    if sum(status.values()) == 2:
        failing = next(name for name, ok in status.items() if not ok)
        report.findings.append(Finding("closure", -1, None, f"{failing} passes", f"{failing} fails"))
    return report


def check_bisim_invariance(
    f: Callable[[Any], Any],
    c_in: Carrier,
    c_out: Carrier,
    samples: Iterable[Any],
    delay_depths: Sequence[int],
    budget: ObsBudget,
    pad: Optional[Callable[[Any, int], Any]] = None,
    subject: str = "",
) -> Report:
    """Flag ``f`` when padding an input with delay changes the observed output."""
    padder = pad or c_in.pad
    drawn, findings = draw_samples(samples, "invariance")
    report = Report("invariance", subject or getattr(f, "__name__", repr(f)), len(drawn), findings)
    report.details = {"delay_depths": list(delay_depths)}
    for index, x in enumerate(drawn):
        try:
            expected = leval(f(x), c_out, budget).result
        except Exception as e:
            report.findings.append(Finding("invariance", index, budget, "f applies", f"raised: {e!r}"))
            continue
        for j in delay_depths:
            try:
                actual = leval(f(padder(x, j)), c_out, budget).result
            except NotImplementedError as e:
                report.findings.append(Finding("invariance", index, budget, f"pad {j}", f"unsupported: {e}"))
                break
            except Exception as e:
                report.findings.append(Finding("invariance", index, budget, expected, f"raised: {e!r}"))
                break
            if actual != expected:
                report.findings.append(Finding("invariance", index, budget, expected, actual))
                break
    return report


__all__ = [
    "Branch",
    "Carrier",
    "BistreamOf",
    "ComposeOf",
    "ConstPairOf",
    "ContOf",
    "DFirstOf",
    "DLastOf",
    "DelayOf",
    "Finding",
    "FunctionOf",
    "GROUND",
    "ITreeOf",
    "IdentityOf",
    "LIFT_BUDGET",
    "LaterOf",
    "Leaf",
    "ListOf",
    "MaybeOf",
    "ObsBudget",
    "Observation",
    "OpOf",
    "PStreamOf",
    "PairOf",
    "Probe",
    "Probed",
    "ProdOf",
    "ReaderOf",
    "Report",
    "Seq",
    "StreamOf",
    "Terminator",
    "UpdateOf",
    "WriterOf",
    "bisimilar",
    "check_bisim_invariance",
    "check_composition_closure",
    "check_gwbeq",
    "delay_depth",
    "leval",
    "llift",
    "nth",
    "render",
    "spine_observation",
    "stream_spine",
    "subtree",
]
