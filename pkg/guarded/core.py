"""The Later modality, the guarded fixpoint, and the forcing capability.

Code in the guarded fragment builds and combines suspensions with
:func:`delay`, :meth:`Later.map`, :func:`lap` and :func:`lfix` only. The
eliminator, :func:`force`, demands a :class:`MetatheoryToken`; exactly one
token is ever issued and the evaluation module holds it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, List, Optional, Tuple, TypeVar, Union

from .errors import BudgetError, CapabilityError, GuardednessError

A = TypeVar("A")
B = TypeVar("B")

_PENDING: Any = object()


class Fusible:
    """A map function that can absorb the map applied after it.

    Mapping over a pending suspension whose own function is Fusible first
    asks that function to combine with the new one; when it can, the result
    is a single node over the same source instead of a node stacked on top.
    """

    __slots__ = ()

    def __call__(self, value: Any) -> Any:
        raise NotImplementedError

    def then(self, after: Callable[[Any], Any]) -> Optional[Callable[[Any], Any]]:
        return None


class Later(Generic[A]):
    """A memoized one-tick suspension.

    A pending suspension is a node over source suspensions: once every
    source has a value, ``fn`` is applied to those values and the result
    cached. Sources and function are dropped after evaluation.
    """

    __slots__ = ("_value", "_fn", "_sources")

    def __init__(self, fn: Callable[..., A], sources: Tuple["Later[Any]", ...] = ()) -> None:
        self._value: Any = _PENDING
        self._fn: Any = fn
        self._sources = sources

    @classmethod
    def _ready(cls, value: A) -> "Later[A]":
        later: Later[A] = cls.__new__(cls)
        later._value = value
        later._fn = None
        later._sources = ()
        return later

    def map(self, f: Callable[[A], B]) -> "Later[B]":
        """Functor map; the result is still one tick deep."""
        fn = self._fn
        if self._value is _PENDING and isinstance(fn, Fusible):
            fused = fn.then(f)
            if fused is not None:
                return Later(fused, self._sources)
        return Later(f, (self,))

    def ap(self: "Later[Callable[[B], Any]]", x: "Later[B]") -> "Later[Any]":
        return lap(self, x)

    def __repr__(self) -> str:
        if self._value is _PENDING:
            return "Later(<pending>)"
        return f"Later({self._value!r})"


def delay(a: A) -> Later[A]:
    """``pure`` for Later: the value, available one tick from now."""
    return Later._ready(a)


def lap(f: Later[Callable[[A], B]], x: Later[A]) -> Later[B]:
    """Applicative application under Later."""
    return Later(_apply, (f, x))


def _apply(f: Callable[[A], B], x: A) -> B:
    return f(x)


def lfix(f: Callable[[Later[A]], A]) -> A:
    """Guarded fixpoint: ``f`` receives a suspension of its own result."""
    knot: List[A] = []

    def tied() -> A:
        if not knot:
            raise GuardednessError("lfix suspension demanded before its fixpoint was tied")
        return knot[0]

    result = f(Later(tied))
    knot.append(result)
    return result


def _demand(root: Later[A]) -> A:
    # Explicit stack: long chains of pending maps must not recurse.
    if root._value is not _PENDING:
        return root._value
    stack: List[Later[Any]] = [root]
    while stack:
        node = stack[-1]
        if node._value is not _PENDING:
            stack.pop()
            continue
        waiting = [s for s in node._sources if s._value is _PENDING]
        if waiting:
            stack.extend(waiting)
            continue
        node._value = node._fn(*(s._value for s in node._sources))
        node._fn = None
        node._sources = ()
        stack.pop()
    return root._value


@dataclass(frozen=True)
class Fuel:
    """Number of Later-forces an observation may still perform."""

    budget: int

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise BudgetError(f"fuel must be non-negative, got {self.budget}")


@dataclass(frozen=True)
class Value(Generic[A]):
    value: A


class Exhausted:
    """Fuel ran out before a value was produced; stands in for ⊥."""

    _instance: "Exhausted | None" = None

    def __new__(cls) -> "Exhausted":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "⊥"

    def __reduce__(self) -> str:
        return "EXHAUSTED"


EXHAUSTED = Exhausted()

Partial = Union[Value[A], Exhausted]


class MetatheoryToken:
    """Zero-information proof of permission to force suspensions."""

    __slots__ = ()
    _issued = False

    def __init__(self, grant: object) -> None:
        if grant is not _GRANT:
            raise CapabilityError("metatheory tokens are issued by guarded.evaluation only")


_GRANT = object()


def _issue_capability() -> MetatheoryToken:
    if MetatheoryToken._issued:
        raise CapabilityError("the metatheory capability has already been issued")
    MetatheoryToken._issued = True
    return MetatheoryToken(_GRANT)


def force(x: Later[A], fuel: Fuel, capability: MetatheoryToken) -> Tuple[Partial[A], Fuel]:
    """Strip one Later layer, charging one unit of fuel.

    Sources read while computing the suspension belong to the same tick and
    are not charged; a cached value is charged like a fresh one.
    """
    if not isinstance(capability, MetatheoryToken):
        raise CapabilityError("force requires the metatheory capability")
    if fuel.budget < 1:
        return EXHAUSTED, fuel
    return Value(_demand(x)), Fuel(fuel.budget - 1)


__all__ = [
    "EXHAUSTED",
    "Exhausted",
    "Fuel",
    "Fusible",
    "Later",
    "MetatheoryToken",
    "Partial",
    "Value",
    "delay",
    "force",
    "lap",
    "lfix",
]
