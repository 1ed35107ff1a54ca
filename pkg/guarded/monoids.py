"""Monoids, Stable carriers, and the stable monoids that absorb Later.

A carrier is Stable when it has ``wait: Later C -> C``. Appends below are
biased: DFirst settles as soon as its left operand does, DLast as soon as
its right operand does, so neither is infinitely associative.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Generic, Iterable, Optional, Tuple, TypeVar

from .core import Fusible, Later, delay, lfix
from .data import (
    NOTHING,
    PNIL,
    Delay,
    Just,
    Maybe,
    Now,
    PCons,
    PStream,
    PWait,
    Wait,
)

A = TypeVar("A")
M = TypeVar("M")


@dataclass(frozen=True)
class Monoid(Generic[M]):
    name: str
    empty: M
    append: Callable[[M, M], M]

    def concat(self, items: Iterable[M]) -> M:
        return reduce(self.append, items, self.empty)


@dataclass(frozen=True)
class Stable(Generic[M]):
    name: str
    wait: Callable[[Later[M]], M]


@dataclass(frozen=True)
class StableMonoid(Monoid[M]):
    """A monoid whose carrier is Stable."""

    wait: Callable[[Later[M]], M]

    @property
    def stable(self) -> Stable[M]:
        return Stable(self.name, self.wait)


SUM: Monoid[int] = Monoid("Sum", 0, lambda x, y: x + y)
TUPLE: Monoid[tuple] = Monoid("Tuple", (), lambda x, y: x + y)

DELAY_STABLE: Stable[Delay[Any]] = Stable("Delay", Wait)
PSTREAM_STABLE: Stable[PStream[Any]] = Stable("PStream", PWait)


# Appends waiting on a suspended operand

# Linked operands, innermost first: (head, rest) or None.
Operands = Optional[Tuple[Any, Any]]


class _Pending(Fusible):
    """Operands to append once a suspended operand settles.

    A suspension mapped by two pendings of the same kind carries one pending
    with both operand lists, so a chain of deferred appends costs one node
    per tick however deep it is nested.
    """

    __slots__ = ("settle", "operands")

    def __init__(self, settle: Callable[[Any, Operands], Any], operands: Operands) -> None:
        self.settle = settle
        self.operands = operands

    def __call__(self, value: Any) -> Any:
        return self.settle(value, self.operands)

    def then(self, after: Callable[[Any], Any]) -> Optional["_Pending"]:
        if not isinstance(after, _Pending) or after.settle is not self.settle:
            return None
        return _Pending(self.settle, _concat(self.operands, after.operands))


def _concat(first: Operands, rest: Operands) -> Operands:
    items = []
    while first is not None:
        head, first = first
        items.append(head)
    for head in reversed(items):
        rest = (head, rest)
    return rest


# PStream

def _settle_pstream(x: PStream[A], rights: Operands) -> PStream[A]:
    heads = []
    while rights is not None:
        while isinstance(x, PCons):
            heads.append(x.head)
            x = x.tail
        if isinstance(x, PWait):
            x = PWait(x.later.map(_Pending(_settle_pstream, rights)))
            break
        x, rights = rights
    for h in reversed(heads):
        x = PCons(h, x)
    return x


def pstream_append(x: PStream[A], y: PStream[A]) -> PStream[A]:
    if y is PNIL:
        return x
    if x is PNIL:
        return y
    return _settle_pstream(x, (y, None))


PSTREAM: StableMonoid[PStream[Any]] = StableMonoid("PStream", PNIL, pstream_append, PWait)


# Delay lifted over a monoid

def delay_monoid(inner: Monoid[M]) -> StableMonoid[Delay[M]]:
    """``Delay w`` with the append that waits on whichever side waits."""

    def is_unit(d: Delay[M]) -> bool:
        return isinstance(d, Now) and d.value == inner.empty

    def append(x: Delay[M], y: Delay[M]) -> Delay[M]:
        if is_unit(y):
            return x
        if is_unit(x):
            return y
        if isinstance(y, Wait):
            return Wait(y.later.map(lambda rest: append(x, rest)))
        if isinstance(x, Wait):
            return Wait(x.later.map(lambda rest: append(rest, y)))
        return Now(inner.append(x.value, y.value))

    return StableMonoid(f"Delay[{inner.name}]", Now(inner.empty), append, Wait)


# DFirst / DLast

@dataclass(frozen=True)
class DFirst(Generic[A]):
    payload: Delay[Maybe[A]]


@dataclass(frozen=True)
class DLast(Generic[A]):
    payload: Delay[Maybe[A]]


def dfirst(a: A) -> DFirst[A]:
    return DFirst(Now(Just(a)))


def dlast(a: A) -> DLast[A]:
    return DLast(Now(Just(a)))


def dfirst_wait(x: Later[DFirst[A]]) -> DFirst[A]:
    return DFirst(Wait(x.map(lambda d: d.payload)))


def dlast_wait(x: Later[DLast[A]]) -> DLast[A]:
    return DLast(Wait(x.map(lambda d: d.payload)))


def _is_nothing(p: Delay[Maybe[A]]) -> bool:
    return isinstance(p, Now) and p.value is NOTHING


def _settle_first(p: Delay[Maybe[A]], rights: Operands) -> Delay[Maybe[A]]:
    while rights is not None:
        if isinstance(p, Wait):
            return Wait(p.later.map(_Pending(_settle_first, rights)))
        if p.value is not NOTHING:
            return p
        p, rights = rights
    return p


def _settle_last(q: Delay[Maybe[A]], lefts: Operands) -> Delay[Maybe[A]]:
    while lefts is not None:
        if isinstance(q, Wait):
            return Wait(q.later.map(_Pending(_settle_last, lefts)))
        if q.value is not NOTHING:
            return q
        q, lefts = lefts
    return q


def dfirst_append(x: DFirst[A], y: DFirst[A]) -> DFirst[A]:
    if _is_nothing(y.payload):
        return x
    p = _settle_first(x.payload, (y.payload, None))
    if p is x.payload:
        return x
    return y if p is y.payload else DFirst(p)


def dlast_append(x: DLast[A], y: DLast[A]) -> DLast[A]:
    if _is_nothing(x.payload):
        return y
    q = _settle_last(y.payload, (x.payload, None))
    if q is y.payload:
        return y
    return x if q is x.payload else DLast(q)


DFIRST: StableMonoid[DFirst[Any]] = StableMonoid(
    "DFirst", DFirst(Now(NOTHING)), dfirst_append, dfirst_wait
)
DLAST: StableMonoid[DLast[Any]] = StableMonoid(
    "DLast", DLast(Now(NOTHING)), dlast_append, dlast_wait
)


def right_nested_chain(monoid: Monoid[M], items: Callable[[int], M]) -> M:
    """``x0 <> (x1 <> (x2 <> ...))`` with the tail delayed at each step."""
    if not isinstance(monoid, StableMonoid):
        raise TypeError(f"{monoid.name} is not stable; an infinite chain needs wait")

    def go(rec: Later[Callable[[int], M]], n: int) -> M:
        return monoid.append(items(n), monoid.wait(rec.map(lambda f: f(n + 1))))

    return lfix(lambda rec: lambda n: go(rec, n))(0)


def left_nested_chain(monoid: Monoid[M], items: Callable[[int], M]) -> M:
    """``((... <> x2) <> x1) <> x0``: the infinitely re-associated chain."""
    if not isinstance(monoid, StableMonoid):
        raise TypeError(f"{monoid.name} is not stable; an infinite chain needs wait")

    def go(rec: Later[Callable[[int], M]], n: int) -> M:
        return monoid.append(monoid.wait(rec.map(lambda f: f(n + 1))), items(n))

    return lfix(lambda rec: lambda n: go(rec, n))(0)


def wait_pad(stable: Stable[M], value: M, layers: int) -> M:
    """Wrap ``value`` in ``layers`` ticks through the carrier's wait."""
    for _ in range(layers):
        value = stable.wait(delay(value))
    return value
