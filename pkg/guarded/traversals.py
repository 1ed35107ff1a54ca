"""Infinite traversals over guarded codata and the checks built on them.

``isequence_stream`` and ``isequence_itree`` are prompt: every ``predict``
sits at the far right of its applicative chain. ``ibackquence`` and the
backward half of ``isequence_bistream`` are not.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from .core import EXHAUSTED, Later, Partial, Value, lap, lfix
from .data import NIL, Bistream, Cons, ILeaf, ITBranch, ITree, Stream, stream_of
from .effects import IDENTITY, READER, Compose, EffectDict, Identity, Reader, Update, Writer
from .errors import GuardednessError
from .evaluation import (
    GROUND,
    Carrier,
    Finding,
    IdentityOf,
    ListOf,
    ObsBudget,
    Observation,
    Report,
    StreamOf,
    Terminator,
    check_gwbeq,
    leval,
    spine_observation,
)


def _predict(eff: EffectDict) -> Callable[[Later[Any]], Any]:
    if eff.predict is None:
        raise GuardednessError(f"{eff.name} is not predictable; an infinite traversal needs predict")
    return eff.predict


def isequence_stream(s: Stream[Any], eff: EffectDict) -> Any:
    predict = _predict(eff)

    def step(rec: Later[Callable[[Stream[Any]], Any]], x: Stream[Any]) -> Any:
        if isinstance(x, Cons):
            return eff.lift_a2(lambda h, t: Cons(h, t), x.head, predict(lap(rec, x.tail)))
        return eff.pure(NIL)

    return lfix(lambda rec: lambda x: step(rec, x))(s)


def isequence_itree(t: ITree[Any], eff: EffectDict) -> Any:
    predict = _predict(eff)

    def step(rec: Later[Callable[[ITree[Any]], Any]], x: ITree[Any]) -> Any:
        if isinstance(x, ILeaf):
            return eff.map(ILeaf, x.value)
        return eff.lift_a2(
            lambda left, right: ITBranch(left, right),
            predict(lap(rec, x.left)),
            predict(lap(rec, x.right)),
        )

    return lfix(lambda rec: lambda x: step(rec, x))(t)


def ibackquence(s: Stream[Any], eff: EffectDict) -> Any:
    """Sequence back to front: the tail's effects run before the head's."""
    predict = _predict(eff)

    def step(rec: Later[Callable[[Stream[Any]], Any]], x: Stream[Any]) -> Any:
        if isinstance(x, Cons):
            return eff.lift_a2(lambda t, h: Cons(h, t), predict(lap(rec, x.tail)), x.head)
        return eff.pure(NIL)

    return lfix(lambda rec: lambda x: step(rec, x))(s)


def isequence_bistream(b: Bistream[Any], eff: EffectDict) -> Any:
    return eff.lift_a2(
        lambda forward, backward: Bistream(forward, backward),
        isequence_stream(b.forward, eff),
        ibackquence(b.backward, eff),
    )


def isequence_later(x: Later[Any], eff: EffectDict) -> Any:
    """Later's own traversal is exactly ``predict``."""
    return _predict(eff)(x)


def sequence_list_oracle(xs: Sequence[Any], eff: EffectDict) -> Any:
    acc = eff.pure([])
    for x in reversed(list(xs)):
        acc = eff.lift_a2(lambda h, rest: [h] + rest, x, acc)
    return acc


def backquence_list(xs: Sequence[Any], eff: EffectDict) -> Any:
    acc = eff.pure([])
    for x in reversed(list(xs)):
        acc = eff.lift_a2(lambda rest, h: [h] + rest, acc, x)
    return acc


def observe_forced(s: Stream[Any], eff: EffectDict, fuel: int) -> Observation:
    """``sequence_forced`` together with the fuel its spine consumed."""
    spine = spine_observation(s, fuel)
    if spine.result.terminator is not Terminator.ENDED:
        return Observation(EXHAUSTED, spine.fuel_used, spine.budget)
    return Observation(Value(sequence_list_oracle(spine.result.elements, eff)), spine.fuel_used, spine.budget)


def sequence_forced(s: Stream[Any], eff: EffectDict, fuel: int) -> Partial[Any]:
    """Sequence at any effect by forcing the whole spine first; ⊥ if it never ends."""
    return observe_forced(s, eff, fuel).result


def transpose_infinite(m: Stream[Reader[int, Any]]) -> Reader[int, Stream[Any]]:
    """Rows indexed by position, columns by the reader's natural-number environment."""
    return isequence_stream(m, READER)


# Reports and catalogs

@dataclass
class TraversalReport(Report):
    law: str = ""
    effect: str = ""

    def to_json(self) -> Dict[str, Any]:
        out = super().to_json()
        out.update(law=self.law, effect=self.effect)
        return out


@dataclass(frozen=True)
class EffectCase:
    """An effect plus what the harness needs to sample and observe it."""

    name: str
    effect: EffectDict
    embed: Callable[[int], Any]
    carrier: Callable[[Carrier], Carrier]
    algebra: Optional[Callable[[Any], Any]] = None

    def sample(self, rng: random.Random) -> Any:
        return self.embed(rng.randint(-3, 9))


@dataclass(frozen=True)
class TraversableKit:
    name: str
    fmap: Callable[[Callable[[Any], Any], Any], Any]
    isequence: Callable[[Any, EffectDict], Any]
    carrier: Callable[[Carrier], Carrier]
    generate: Callable[[random.Random, Callable[[random.Random], Any]], Any]


@dataclass(frozen=True)
class Morphism:
    """An applicative morphism used for the naturality law."""

    name: str
    source: EffectCase
    target: EffectCase
    apply: Callable[[Any], Any]


@dataclass(frozen=True)
class Composite:
    outer: EffectCase
    inner: EffectCase
    effect: EffectDict


def _samples(kit: TraversableKit, seed: int, count: int, element: Callable[[random.Random], Any]) -> List[Any]:
    rng = random.Random(seed)
    return [kit.generate(rng, element) for _ in range(count)]


def _law_report(kit: TraversableKit, law: str, effect: str, inner: Report) -> TraversalReport:
    return TraversalReport(
        check=f"laws/{kit.name}/{law}",
        subject=kit.name,
        samples=inner.samples,
        findings=inner.findings,
        details=inner.details,
        probes=inner.probes,
        law=law,
        effect=effect,
    )


def check_identity_law(
    kit: TraversableKit, seed: int, count: int, budgets: Sequence[ObsBudget]
) -> TraversalReport:
    """``isequence . fmap Identity`` is bisimilar to ``Identity``."""
    samples = _samples(kit, seed, count, lambda rng: rng.randint(-9, 9))
    report = check_gwbeq(
        lambda t: kit.isequence(kit.fmap(Identity, t), IDENTITY),
        samples,
        budgets,
        kit.carrier(GROUND),
        IdentityOf(kit.carrier(GROUND)),
        check="identity",
    )
    return _law_report(kit, "identity", "Identity", report)


def check_composition_law(
    kit: TraversableKit, composite: Composite, seed: int, count: int, budgets: Sequence[ObsBudget]
) -> TraversalReport:
    """``Compose . fmap isequence . isequence`` is bisimilar to ``isequence`` at Compose."""
    outer, inner = composite.outer, composite.inner
    samples = _samples(
        kit, seed, count, lambda rng: outer.effect.map(inner.embed, outer.sample(rng))
    )
    carrier = outer.carrier(inner.carrier(kit.carrier(GROUND)))

    def nested(t: Any) -> Any:
        return outer.effect.map(lambda g: kit.isequence(g, inner.effect), kit.isequence(t, outer.effect))

    def composed(t: Any) -> Any:
        return kit.isequence(kit.fmap(Compose, t), composite.effect).run

    report = check_gwbeq(
        composed,
        samples,
        budgets,
        _Applied(nested, carrier),
        carrier,
        check="composition",
    )
    return _law_report(kit, "composition", composite.effect.name, report)


def check_naturality_law(
    kit: TraversableKit, morphism: Morphism, seed: int, count: int, budgets: Sequence[ObsBudget]
) -> TraversalReport:
    """``t . isequence`` is bisimilar to ``isequence . fmap t``."""
    source, target = morphism.source, morphism.target
    samples = _samples(kit, seed, count, source.sample)
    carrier = target.carrier(kit.carrier(GROUND))

    report = check_gwbeq(
        lambda t: kit.isequence(kit.fmap(morphism.apply, t), target.effect),
        samples,
        budgets,
        _Applied(lambda t: morphism.apply(kit.isequence(t, source.effect)), carrier),
        carrier,
        check="naturality",
    )
    return _law_report(kit, "naturality", morphism.name, report)


class _Applied(Carrier):
    """Observe ``fn(x)`` with ``carrier``: lets one side of a law be computed."""

    def __init__(self, fn: Callable[[Any], Any], carrier: Carrier) -> None:
        self.fn, self.carrier = fn, carrier
        self.name = carrier.name
        self.probes = getattr(carrier, "probes", None) or getattr(carrier, "envs", None) or getattr(
            carrier, "states", None
        )

    def observe(self, x: Any, meter: Any) -> Any:
        return self.carrier.observe(self.fn(x), meter)

    def lift(self, r: Any) -> Any:
        raise NotImplementedError("law sides are observed, not lifted")


def check_traversal_laws(
    kit: TraversableKit,
    composites: Sequence[Composite],
    morphisms: Sequence[Morphism],
    seed: int,
    count: int,
    budgets: Sequence[ObsBudget],
) -> List[TraversalReport]:
    reports = [check_identity_law(kit, seed, count, budgets)]
    reports.extend(check_composition_law(kit, c, seed, count, budgets) for c in composites)
    reports.extend(check_naturality_law(kit, m, seed, count, budgets) for m in morphisms)
    return reports


def fusion_check(case: EffectCase, lists: Iterable[Sequence[Any]], budget: ObsBudget) -> TraversalReport:
    """``leval . isequence . llift`` against the textbook list sequence."""
    lists = list(lists)
    report = TraversalReport(
        check=f"fusion/{case.name}", subject="Stream", samples=len(lists), law="fusion", effect=case.name
    )
    traversed = case.carrier(StreamOf(GROUND))
    oracle = case.carrier(ListOf(GROUND))
    for index, xs in enumerate(lists):
        try:
            actual = leval(isequence_stream(stream_of(*xs), case.effect), traversed, budget).result
            expected = leval(sequence_list_oracle(xs, case.effect), oracle, budget).result
        except Exception as e:
            report.findings.append(Finding(report.check, index, budget, "no exception", f"raised: {e!r}"))
            continue
        if actual != expected:
            report.findings.append(Finding(report.check, index, budget, expected, actual))
    return report


# Productivity

def reader_algebra(env: Any) -> Callable[[Reader[Any, Any]], Any]:
    return lambda r: r.run(env)


def writer_algebra(w: Writer[Any, Any]) -> Any:
    return w.value


def update_algebra(s0: Any) -> Callable[[Update[Any, Any, Any]], Any]:
    return lambda u: u.run(s0)[1]


def identity_algebra(i: Identity[Any]) -> Any:
    return i.value


def productivity_probe(
    result: Any,
    alg: Callable[[Any], Stream[Any]],
    k: int,
    fuel: int,
    element: Carrier = GROUND,
) -> Observation:
    """Observe a prefix of length ``k`` of the algebra's image of a traversal."""
    return leval(alg(result), StreamOf(element), ObsBudget(k, fuel))


@dataclass(frozen=True)
class LinearBound:
    slope: int
    intercept: int

    def allows(self, k: int, fuel_used: int) -> bool:
        return fuel_used <= self.slope * k + self.intercept


def measure_productivity(
    build: Callable[[], Any],
    alg: Callable[[Any], Stream[Any]],
    prefixes: Sequence[int],
    fuel: int,
    bound: LinearBound,
    subject: str = "",
) -> TraversalReport:
    """Fuel needed per prefix length, flagged when it exceeds ``bound``.

    ``build`` is called afresh for each prefix so earlier observations
    cannot warm the suspensions of later ones.
    """
    report = TraversalReport(check="productivity", subject=subject, samples=len(prefixes), law="productivity")
    used: Dict[int, int] = {}
    for k in prefixes:
        obs = productivity_probe(build(), alg, k, fuel)
        used[k] = obs.fuel_used
        if obs.partial or len(obs.result.elements) < k or not bound.allows(k, obs.fuel_used):
            report.findings.append(
                Finding("productivity", k, obs.budget, f"<= {bound.slope}*{k}+{bound.intercept}", obs.fuel_used)
            )
    report.details = {"fuel_used": used, "bound": {"slope": bound.slope, "intercept": bound.intercept}}
    return report


__all__ = [
    "Composite",
    "EffectCase",
    "LinearBound",
    "Morphism",
    "TraversableKit",
    "TraversalReport",
    "backquence_list",
    "check_composition_law",
    "check_identity_law",
    "check_naturality_law",
    "check_traversal_laws",
    "fusion_check",
    "ibackquence",
    "identity_algebra",
    "isequence_bistream",
    "isequence_itree",
    "isequence_later",
    "isequence_stream",
    "measure_productivity",
    "observe_forced",
    "productivity_probe",
    "reader_algebra",
    "sequence_forced",
    "sequence_list_oracle",
    "transpose_infinite",
    "update_algebra",
    "writer_algebra",
]
