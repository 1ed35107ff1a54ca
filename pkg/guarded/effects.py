"""Applicative effects, their ``predict`` instances, and the nonexamples.

An effect is described by an :class:`EffectDict` (pure, map, apply and an
optional predict), so traversals are written once against that contract.
Effects whose instance needs a Stable carrier take it as an argument and
only grow a ``predict`` when the carrier actually is stable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Generic, List, Optional, Sequence, Tuple, TypeVar

from toolz import curry, identity

from .core import Later, delay, lap
from .data import NOTHING, PCons, PStream, Just, Maybe
from .errors import GuardednessError
from .monoids import Monoid, Stable, StableMonoid

A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")
R = TypeVar("R")
S = TypeVar("S")
P = TypeVar("P")
W = TypeVar("W")


@dataclass(frozen=True)
class EffectDict:
    """What an applicative effect supplies to a traversal."""

    name: str
    pure: Callable[[Any], Any]
    map: Callable[[Callable[[Any], Any], Any], Any]
    apply: Callable[[Any, Any], Any]
    predict: Optional[Callable[[Later[Any]], Any]] = None
    notes: Tuple[str, ...] = field(default=())

    @property
    def predictable(self) -> bool:
        return self.predict is not None

    def lift_a2(self, f: Callable[[Any, Any], Any], x: Any, y: Any) -> Any:
        return self.apply(self.map(curry(f), x), y)


# Carriers of the effects

@dataclass(frozen=True)
class Identity(Generic[A]):
    value: A


@dataclass(frozen=True, eq=False)
class Reader(Generic[R, A]):
    run: Callable[[R], A]


@dataclass(frozen=True, eq=False)
class Writer(Generic[W, A]):
    value: A
    log: W


@dataclass(frozen=True, eq=False)
class Update(Generic[P, S, A]):
    run: Callable[[S], Tuple[P, A]]


@dataclass(frozen=True, eq=False)
class Cont(Generic[R, A]):
    run: Callable[[Callable[[A], R]], R]


@dataclass(frozen=True, eq=False)
class Prod(Generic[A]):
    first: Any
    second: Any


@dataclass(frozen=True, eq=False)
class Compose(Generic[A]):
    run: Any


@dataclass(frozen=True, eq=False)
class ConstPair(Generic[C, A]):
    c: C
    a: A


@dataclass(frozen=True, eq=False)
class Op(Generic[A, R]):
    """A contravariant functor: functions into a fixed answer type."""

    run: Callable[[A], R]

    def contramap(self, f: Callable[[B], A]) -> "Op[B, R]":
        return Op(lambda b: self.run(f(b)))


@dataclass(frozen=True)
class ZipList(Generic[A]):
    """Zip applicative; ``pure`` is represented by a single cycling item."""

    items: Tuple[A, ...]
    cycling: bool = False


@dataclass(frozen=True)
class ApplyAction(Generic[P, S]):
    """A monoid ``P`` acting on states ``S``."""

    monoid: Monoid[P]
    act: Callable[[P, S], S]


# Later

def predict_later(x: Later[Later[A]]) -> Later[Later[A]]:
    return x


LATER = EffectDict(
    "Later",
    pure=delay,
    map=lambda f, x: x.map(f),
    apply=lap,
    predict=predict_later,
)


# Identity

IDENTITY = EffectDict(
    "Identity",
    pure=Identity,
    map=lambda f, x: Identity(f(x.value)),
    apply=lambda f, x: Identity(f.value(x.value)),
    predict=lambda x: Identity(x.map(lambda i: i.value)),
)


# Reader

def ask() -> Reader[R, R]:
    return Reader(identity)


def predict_reader(x: Later[Reader[R, A]]) -> Reader[R, Later[A]]:
    return Reader(lambda r: x.map(lambda reader: reader.run(r)))


def _reader_apply(f: Reader[R, Callable[[A], B]], x: Reader[R, A]) -> Reader[R, B]:
    return Reader(lambda r: f.run(r)(x.run(r)))


READER = EffectDict(
    "Reader",
    pure=lambda a: Reader(lambda _: a),
    map=lambda f, x: Reader(lambda r: f(x.run(r))),
    apply=_reader_apply,
    predict=predict_reader,
)


# Writer

def tell(log: W) -> Writer[W, None]:
    return Writer(None, log)


def predict_writer(x: Later[Writer[W, A]], stable: Stable[W]) -> Writer[W, Later[A]]:
    return Writer(x.map(lambda w: w.value), stable.wait(x.map(lambda w: w.log)))


def writer(monoid: Monoid[W]) -> EffectDict:
    """Writer over ``monoid``; logs combine left to right."""
    predict = None
    if isinstance(monoid, StableMonoid):
        stable = monoid.stable
        predict = lambda x: predict_writer(x, stable)  # noqa: E731
    return EffectDict(
        f"Writer[{monoid.name}]",
        pure=lambda a: Writer(a, monoid.empty),
        map=lambda f, x: Writer(f(x.value), x.log),
        apply=lambda f, x: Writer(f.value(x.value), monoid.append(f.log, x.log)),
        predict=predict,
    )


# Pairs with a stable constant

def predict_const_pair(x: Later[Tuple[C, A]], stable: Stable[C]) -> Tuple[C, Later[A]]:
    return stable.wait(x.map(lambda pair: pair[0])), x.map(lambda pair: pair[1])


def const_pair(monoid: Monoid[C]) -> EffectDict:
    predict = None
    if isinstance(monoid, StableMonoid):
        stable = monoid.stable

        def predict(x: Later[ConstPair[C, A]]) -> ConstPair[C, Later[A]]:
            c, a = predict_const_pair(x.map(lambda cp: (cp.c, cp.a)), stable)
            return ConstPair(c, a)

    return EffectDict(
        f"ConstPair[{monoid.name}]",
        pure=lambda a: ConstPair(monoid.empty, a),
        map=lambda f, x: ConstPair(x.c, f(x.a)),
        apply=lambda f, x: ConstPair(monoid.append(f.c, x.c), f.a(x.a)),
        predict=predict,
    )


def wait_from_pair_predict(stable: Stable[C]) -> Callable[[Later[C]], C]:
    """The ``Later C -> C`` a pair predict implies: pair with a unit, predict, project."""

    def wait(x: Later[C]) -> C:
        return predict_const_pair(x.map(lambda c: (c, ())), stable)[0]

    return wait


# Products and composites

def predict_prod(x: Later[Prod[A]], first: EffectDict, second: EffectDict) -> Prod[Later[A]]:
    return Prod(
        _predict_of(first)(x.map(lambda p: p.first)),
        _predict_of(second)(x.map(lambda p: p.second)),
    )


def prod(first: EffectDict, second: EffectDict) -> EffectDict:
    predict = None
    if first.predictable and second.predictable:
        predict = lambda x: predict_prod(x, first, second)  # noqa: E731
    return EffectDict(
        f"Prod[{first.name},{second.name}]",
        pure=lambda a: Prod(first.pure(a), second.pure(a)),
        map=lambda f, x: Prod(first.map(f, x.first), second.map(f, x.second)),
        apply=lambda f, x: Prod(
            first.apply(f.first, x.first), second.apply(f.second, x.second)
        ),
        predict=predict,
    )


def predict_compose(
    x: Later[Compose[A]], outer: EffectDict, inner: EffectDict
) -> Compose[Later[A]]:
    predicted = _predict_of(outer)(x.map(lambda c: c.run))
    return Compose(outer.map(_predict_of(inner), predicted))


def compose(outer: EffectDict, inner: EffectDict) -> EffectDict:
    predict = None
    if outer.predictable and inner.predictable:
        predict = lambda x: predict_compose(x, outer, inner)  # noqa: E731
    return EffectDict(
        f"Compose[{outer.name},{inner.name}]",
        pure=lambda a: Compose(outer.pure(inner.pure(a))),
        map=lambda f, x: Compose(outer.map(lambda g: inner.map(f, g), x.run)),
        apply=lambda f, x: Compose(
            outer.apply(outer.map(curry(inner.apply), f.run), x.run)
        ),
        predict=predict,
    )


# Update

def put_action(p: P) -> Update[P, Any, None]:
    return Update(lambda _: (p, None))


def get_state(monoid: Monoid[P]) -> Update[P, S, S]:
    return Update(lambda s: (monoid.empty, s))


def update_bind(
    m: Update[P, S, A], k: Callable[[A], Update[P, S, B]], action: ApplyAction[P, S]
) -> Update[P, S, B]:
    def run(s: S) -> Tuple[P, B]:
        p, a = m.run(s)
        p2, b = k(a).run(action.act(p, s))
        return action.monoid.append(p, p2), b

    return Update(run)


def update_then(
    m: Update[P, S, Any], n: Update[P, S, B], action: ApplyAction[P, S]
) -> Update[P, S, B]:
    return update_bind(m, lambda _: n, action)


def predict_update(x: Later[Update[P, S, A]], stable: Stable[P]) -> Update[P, S, Later[A]]:
    return Update(lambda s: predict_const_pair(x.map(lambda u: u.run(s)), stable))


def update(action: ApplyAction[P, S]) -> EffectDict:
    monoid = action.monoid
    predict = None
    if isinstance(monoid, StableMonoid):
        stable = monoid.stable
        predict = lambda x: predict_update(x, stable)  # noqa: E731

    def pure(a: A) -> Update[P, S, A]:
        return Update(lambda _: (monoid.empty, a))

    def fmap(f: Callable[[A], B], x: Update[P, S, A]) -> Update[P, S, B]:
        def run(s: S) -> Tuple[P, B]:
            p, a = x.run(s)
            return p, f(a)

        return Update(run)

    def apply(f: Update[P, S, Callable[[A], B]], x: Update[P, S, A]) -> Update[P, S, B]:
        return update_bind(f, lambda g: update_bind(x, lambda a: pure(g(a)), action), action)

    return EffectDict(f"Update[{monoid.name}]", pure, fmap, apply, predict)


def apply_action_head(p: PStream[A], s: A) -> A:
    """The state becomes the head of ``p`` when that head is immediately present."""
    if isinstance(p, PCons):
        return p.head
    return s


def head_action(monoid: Monoid[PStream[Any]]) -> ApplyAction[PStream[Any], Any]:
    return ApplyAction(monoid, apply_action_head)


# Continuations

def predict_cont(x: Later[Cont[R, A]], stable: Stable[R]) -> Cont[R, Later[A]]:
    return Cont(lambda z: stable.wait(x.map(lambda c: c.run(lambda a: z(delay(a))))))


def cont(stable: Optional[Stable[Any]] = None) -> EffectDict:
    predict = None
    if stable is not None:
        predict = lambda x: predict_cont(x, stable)  # noqa: E731
    return EffectDict(
        "Cont" if stable is None else f"Cont[{stable.name}]",
        pure=lambda a: Cont(lambda k: k(a)),
        map=lambda f, x: Cont(lambda k: x.run(lambda a: k(f(a)))),
        apply=lambda f, x: Cont(lambda k: f.run(lambda g: x.run(lambda a: k(g(a))))),
        predict=predict,
        notes=("observed with the terminal continuation Now",),
    )


def predict_negative(f: Later[Callable[[Op[A, R]], R]], z: Op[Later[A], R], stable: Stable[R]) -> R:
    """Predict for a function out of a contravariant functor into a stable answer."""
    return stable.wait(f.map(lambda g: g(z.contramap(delay))))


# Nonexamples

def _maybe_apply(f: Maybe[Callable[[A], B]], x: Maybe[A]) -> Maybe[B]:
    if isinstance(f, Just) and isinstance(x, Just):
        return Just(f.value(x.value))
    return NOTHING


MAYBE = EffectDict(
    "Maybe",
    pure=Just,
    map=lambda f, x: Just(f(x.value)) if isinstance(x, Just) else NOTHING,
    apply=_maybe_apply,
)


def predict_maybe_candidate(x: Later[Maybe[A]]) -> Maybe[Later[A]]:
    """Guesses ``Just`` without looking; wrong whenever the suspension holds Nothing."""
    return Just(x.map(lambda m: m.value if isinstance(m, Just) else None))


def _list_apply(fs: Sequence[Callable[[A], B]], xs: Sequence[A]) -> List[B]:
    return [f(x) for f in fs for x in xs]


LIST = EffectDict(
    "List",
    pure=lambda a: [a],
    map=lambda f, xs: [f(x) for x in xs],
    apply=_list_apply,
)


def _zip_apply(fs: ZipList[Callable[[A], B]], xs: ZipList[A]) -> ZipList[B]:
    if fs.cycling and xs.cycling:
        return ZipList((fs.items[0](xs.items[0]),), cycling=True)
    if fs.cycling:
        return ZipList(tuple(fs.items[0](x) for x in xs.items))
    if xs.cycling:
        return ZipList(tuple(f(xs.items[0]) for f in fs.items))
    return ZipList(tuple(f(x) for f, x in zip(fs.items, xs.items)))


ZIPLIST = EffectDict(
    "ZipList",
    pure=lambda a: ZipList((a,), cycling=True),
    map=lambda f, z: ZipList(tuple(f(x) for x in z.items), z.cycling),
    apply=_zip_apply,
)


def _predict_of(effect: EffectDict) -> Callable[[Later[Any]], Any]:
    if effect.predict is None:
        raise GuardednessError(f"effect {effect.name} has no predict")
    return effect.predict
