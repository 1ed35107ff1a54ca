"""Guarded codata and the combinators written over them.

Every recursive occurrence that may be infinite sits under a ``Later``;
recursion goes through :func:`~guarded.core.lfix` only. ``PCons`` keeps an
unguarded tail, so functions over PStream recurse structurally over the
finite ``PCons`` run and guard only at ``PWait``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Generic, Optional, Sequence, Tuple, TypeVar, Union

from toolz import curry, identity

from .core import Later, delay, lap, lfix

A = TypeVar("A")
B = TypeVar("B")


class Nothing:
    """The empty optional."""

    _instance: "Nothing | None" = None

    def __new__(cls) -> "Nothing":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Nothing"

    def __reduce__(self) -> str:
        return "NOTHING"


NOTHING = Nothing()


@dataclass(frozen=True)
class Just(Generic[A]):
    value: A


Maybe = Union[Just[A], Nothing]


# Stream

class _Nil:
    _instance: "_Nil | None" = None

    def __new__(cls) -> "_Nil":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Nil"

    def __reduce__(self) -> str:
        return "NIL"


NIL = _Nil()


@dataclass(frozen=True, eq=False)
class Cons(Generic[A]):
    head: A
    tail: Later["Stream[A]"]


Stream = Union[_Nil, Cons[A]]


# Delay

@dataclass(frozen=True)
class Now(Generic[A]):
    value: A


@dataclass(frozen=True, eq=False)
class Wait(Generic[A]):
    later: Later["Delay[A]"]


Delay = Union[Now[A], Wait[A]]


# PStream

class _PNil:
    _instance: "_PNil | None" = None

    def __new__(cls) -> "_PNil":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "PNil"

    def __reduce__(self) -> str:
        return "PNIL"


PNIL = _PNil()


@dataclass(frozen=True, eq=False)
class PWait(Generic[A]):
    later: Later["PStream[A]"]


@dataclass(frozen=True, eq=False)
class PCons(Generic[A]):
    head: A
    tail: "PStream[A]"


PStream = Union[_PNil, PWait[A], PCons[A]]


# ITree

class Direction(enum.Enum):
    L = "L"
    R = "R"


Path = Tuple[Direction, ...]


@dataclass(frozen=True)
class ILeaf(Generic[A]):
    value: A


@dataclass(frozen=True, eq=False)
class ITBranch(Generic[A]):
    left: Later["ITree[A]"]
    right: Later["ITree[A]"]


ITree = Union[ILeaf[A], ITBranch[A]]


@dataclass(frozen=True, eq=False)
class Bistream(Generic[A]):
    forward: Stream[A]
    backward: Stream[A]


EMPTY_BISTREAM: Bistream[Any] = Bistream(NIL, NIL)


# Stream combinators

def _interleave_step(rec: Later[Any], s1: Stream[A], s2: Stream[A]) -> Stream[A]:
    if isinstance(s1, Cons):
        return Cons(s1.head, lap(lap(rec, delay(s2)), s1.tail))
    return s2


_sinterleave = lfix(lambda rec: curry(lambda s1, s2: _interleave_step(rec, s1, s2)))


def sinterleave(s1: Stream[A], s2: Stream[A]) -> Stream[A]:
    """Alternate elements, starting from ``s1``."""
    return _sinterleave(s1, s2)


def _zip_step(rec: Later[Any], s1: Stream[A], s2: Stream[B]) -> Stream[Tuple[A, B]]:
    if isinstance(s1, Cons) and isinstance(s2, Cons):
        return Cons((s1.head, s2.head), lap(lap(rec, s1.tail), s2.tail))
    return NIL


_szip = lfix(lambda rec: curry(lambda s1, s2: _zip_step(rec, s1, s2)))


def szip(s1: Stream[A], s2: Stream[B]) -> Stream[Tuple[A, B]]:
    """Truncated pairing; ends when either stream ends."""
    return _szip(s1, s2)


def _last_step(rec: Later[Any], default: Maybe[A], s: Stream[A]) -> Delay[Maybe[A]]:
    if isinstance(s, Cons):
        return Wait(lap(lap(rec, delay(Just(s.head))), s.tail))
    return Now(default)


_slast = lfix(lambda rec: curry(lambda default, s: _last_step(rec, default, s)))


def slast(s: Stream[A]) -> Delay[Maybe[A]]:
    """Last element of a possibly infinite stream, one ``Wait`` per ``Cons``."""
    return _slast(NOTHING, s)


def _plast_step(rec: Later[Any], default: Maybe[A], p: PStream[A]) -> Delay[Maybe[A]]:
    while isinstance(p, PCons):
        default, p = Just(p.head), p.tail
    if isinstance(p, PWait):
        return Wait(lap(lap(rec, delay(default)), p.later))
    return Now(default)


_plast = lfix(lambda rec: curry(lambda default, p: _plast_step(rec, default, p)))


def plast(p: PStream[A]) -> Delay[Maybe[A]]:
    """Last element of a possibly productive stream; ``PWait`` becomes ``Wait``."""
    return _plast(NOTHING, p)


def repeat_forever(a: A) -> Stream[A]:
    return lfix(lambda rest: Cons(a, rest))


def smap(f: Callable[[A], B], s: Stream[A]) -> Stream[B]:
    def step(rec: Later[Callable[[Stream[A]], Stream[B]]], x: Stream[A]) -> Stream[B]:
        if isinstance(x, Cons):
            return Cons(f(x.head), lap(rec, x.tail))
        return NIL

    return lfix(lambda rec: lambda x: step(rec, x))(s)


def stream_of(*items: A) -> Stream[A]:
    """A finite stream, one tick per tail."""
    s: Stream[A] = NIL
    for item in reversed(items):
        s = Cons(item, delay(s))
    return s


def scycle(items: Sequence[A]) -> Stream[A]:
    """The infinite stream repeating ``items``."""
    if not items:
        raise ValueError("scycle needs at least one element")

    def knot(rest: Later[Stream[A]]) -> Stream[A]:
        s: Cons[A] = Cons(items[-1], rest)
        for item in reversed(items[:-1]):
            s = Cons(item, delay(s))
        return s

    return lfix(knot)


def tabulate(f: Callable[[int], A]) -> Stream[A]:
    """The stream ``f(0), f(1), f(2), ...``."""
    go = lfix(lambda rec: lambda n: Cons(f(n), lap(rec, delay(n + 1))))
    return go(0)


def naturals() -> Stream[int]:
    return tabulate(identity)


# PStream combinators

def pstream_of(*items: A) -> PStream[A]:
    p: PStream[A] = PNIL
    for item in reversed(items):
        p = PCons(item, p)
    return p


def pmap(f: Callable[[A], B], p: PStream[A]) -> PStream[B]:
    def step(rec: Later[Callable[[PStream[A]], PStream[B]]], x: PStream[A]) -> PStream[B]:
        heads = []
        while isinstance(x, PCons):
            heads.append(f(x.head))
            x = x.tail
        out: PStream[B] = PWait(lap(rec, x.later)) if isinstance(x, PWait) else PNIL
        for h in reversed(heads):
            out = PCons(h, out)
        return out

    return lfix(lambda rec: lambda x: step(rec, x))(p)


def delay_map(f: Callable[[A], B], d: Delay[A]) -> Delay[B]:
    go = lfix(
        lambda rec: lambda x: Now(f(x.value)) if isinstance(x, Now) else Wait(lap(rec, x.later))
    )
    return go(d)


def wait_n(d: Delay[A], n: int) -> Delay[A]:
    for _ in range(n):
        d = Wait(delay(d))
    return d


# Bistream

def bicons(x: A, b: Bistream[A]) -> Bistream[A]:
    return Bistream(Cons(x, delay(b.forward)), b.backward)


def bisnoc(y: A, b: Bistream[A]) -> Bistream[A]:
    return Bistream(b.forward, Cons(y, delay(b.backward)))


def bistream_map(f: Callable[[A], B], b: Bistream[A]) -> Bistream[B]:
    return Bistream(smap(f, b.forward), smap(f, b.backward))


# ITree

def itree_full(
    f: Callable[[Path], A],
    is_leaf: Optional[Callable[[Path], bool]] = None,
) -> ITree[A]:
    """Tree generator indexed by paths.

    Without ``is_leaf`` the tree branches forever; with it, a path for which
    the predicate holds becomes ``ILeaf(f(path))``.
    """
    leaf_at = is_leaf or (lambda path: False)

    def step(rec: Later[Callable[[Path], ITree[A]]], path: Path) -> ITree[A]:
        if leaf_at(path):
            return ILeaf(f(path))
        return ITBranch(
            lap(rec, delay(path + (Direction.L,))),
            lap(rec, delay(path + (Direction.R,))),
        )

    return lfix(lambda rec: lambda path: step(rec, path))(())


def itree_map(f: Callable[[A], B], t: ITree[A]) -> ITree[B]:
    def step(rec: Later[Callable[[ITree[A]], ITree[B]]], x: ITree[A]) -> ITree[B]:
        if isinstance(x, ILeaf):
            return ILeaf(f(x.value))
        return ITBranch(lap(rec, x.left), lap(rec, x.right))

    return lfix(lambda rec: lambda x: step(rec, x))(t)
