"""Seeded sample generators and the effect/traversable catalogs used by the suite.

Every generator takes an explicit seed (or ``random.Random``) so identical
seeds give identical samples. Degenerate samples come first.
"""
from __future__ import annotations

import random
from typing import Any, Callable, List, Sequence, Tuple

from .core import Later, delay
from .data import (
    PNIL,
    Bistream,
    Delay,
    ILeaf,
    ITBranch,
    ITree,
    Now,
    PCons,
    PStream,
    PWait,
    Stream,
    bistream_map,
    itree_map,
    pmap,
    pstream_of,
    smap,
    stream_of,
    wait_n,
)
from .effects import (
    IDENTITY,
    LATER,
    READER,
    Cont,
    Identity,
    Reader,
    Update,
    Writer,
    compose,
    cont,
    head_action,
    update,
    writer,
)
from .evaluation import (
    ContOf,
    DFirstOf,
    DLastOf,
    IdentityOf,
    LaterOf,
    ObsBudget,
    PStreamOf,
    ReaderOf,
    UpdateOf,
    WriterOf,
    BistreamOf,
    ITreeOf,
    StreamOf,
)
from .monoids import DELAY_STABLE, DFIRST, DLAST, PSTREAM, DFirst, DLast, dfirst, dlast, wait_pad
from .traversals import (
    Composite,
    EffectCase,
    Morphism,
    TraversableKit,
    identity_algebra,
    isequence_bistream,
    isequence_itree,
    isequence_stream,
    reader_algebra,
    update_algebra,
    writer_algebra,
)

ENVS: Tuple[int, ...] = (0, 1, 5)
STATES: Tuple[int, ...] = (0, 3)


def budgets(depth: int, fuel: int) -> Tuple[ObsBudget, ...]:
    """Three budgets per law: half depth, the configured one, and doubled."""
    return (
        ObsBudget(max(1, depth // 2), fuel),
        ObsBudget(depth, fuel),
        ObsBudget(depth * 2, fuel * 2),
    )


# Plain values

def int_lists(seed: int, count: int, max_len: int = 8) -> List[List[int]]:
    rng = random.Random(seed)
    out: List[List[int]] = [[], [0]]
    while len(out) < count:
        out.append([rng.randint(-9, 9) for _ in range(rng.randint(0, max_len))])
    return out[:count]


def finite_stream(rng: random.Random, element: Callable[[random.Random], Any], max_len: int = 6) -> Stream[Any]:
    return stream_of(*(element(rng) for _ in range(rng.randint(0, max_len))))


def finite_itree(
    rng: random.Random, element: Callable[[random.Random], Any], max_depth: int = 3
) -> ITree[Any]:
    if max_depth == 0 or rng.random() < 0.3:
        return ILeaf(element(rng))
    left = finite_itree(rng, element, max_depth - 1)
    right = finite_itree(rng, element, max_depth - 1)
    return ITBranch(delay(left), delay(right))


def finite_bistream(rng: random.Random, element: Callable[[random.Random], Any]) -> Bistream[Any]:
    return Bistream(finite_stream(rng, element, 4), finite_stream(rng, element, 4))


def delays(seed: int, count: int, max_waits: int = 4) -> List[Delay[int]]:
    rng = random.Random(seed)
    out: List[Delay[int]] = [Now(0)]
    while len(out) < count:
        out.append(wait_n(Now(rng.randint(-9, 9)), rng.randint(0, max_waits)))
    return out[:count]


def _pstream(rng: random.Random, max_len: int) -> PStream[int]:
    p: PStream[int] = PNIL
    for _ in range(rng.randint(0, max_len)):
        if rng.random() < 0.3:
            p = PWait(delay(p))
        p = PCons(rng.randint(-9, 9), p)
    if rng.random() < 0.3:
        p = PWait(delay(p))
    return p


def pstreams(seed: int, count: int, max_len: int = 5) -> List[PStream[int]]:
    rng = random.Random(seed)
    out: List[PStream[int]] = [PNIL, pstream_of(1)]
    while len(out) < count:
        out.append(_pstream(rng, max_len))
    return out[:count]


def prompt_pstreams(seed: int, count: int, max_len: int = 5) -> List[PStream[int]]:
    """PStreams whose first element, if any, is not delayed."""
    rng = random.Random(seed)
    out: List[PStream[int]] = [PNIL]
    while len(out) < count:
        p = _pstream(rng, max_len)
        while isinstance(p, PWait):
            p = PCons(rng.randint(-9, 9), p)
        out.append(p)
    return out[:count]


def wait_free_pstreams(seed: int, count: int, max_len: int = 5) -> List[PStream[int]]:
    rng = random.Random(seed)
    out: List[PStream[int]] = [PNIL]
    while len(out) < count:
        out.append(pstream_of(*(rng.randint(-9, 9) for _ in range(rng.randint(0, max_len)))))
    return out[:count]


def dfirsts(seed: int, count: int) -> List[DFirst[int]]:
    rng = random.Random(seed)
    out: List[DFirst[int]] = [DFIRST.empty, dfirst(0)]
    while len(out) < count:
        base = dfirst(rng.randint(-9, 9)) if rng.random() < 0.7 else DFIRST.empty
        out.append(wait_pad(DFIRST.stable, base, rng.randint(0, 3)))
    return out[:count]


def dlasts(seed: int, count: int) -> List[DLast[int]]:
    rng = random.Random(seed)
    out: List[DLast[int]] = [DLAST.empty, dlast(0)]
    while len(out) < count:
        base = dlast(rng.randint(-9, 9)) if rng.random() < 0.7 else DLAST.empty
        out.append(wait_pad(DLAST.stable, base, rng.randint(0, 3)))
    return out[:count]


def suspended(seed: int, count: int, make: Callable[[random.Random], Any]) -> List[Later[Any]]:
    """One-tick suspensions of generated values, built both ready and mapped."""
    rng = random.Random(seed)
    out: List[Later[Any]] = []
    for i in range(count):
        value = make(rng)
        out.append(delay(value) if i % 2 == 0 else delay(None).map(lambda _, v=value: v))
    return out


# Effect embeddings: deterministic functions of an integer seed value

def _pstream_log(n: int) -> PStream[int]:
    if n % 3 == 0:
        return PNIL
    if n % 4 == 0:
        return PWait(delay(pstream_of(n)))
    return pstream_of(n)


def _update_embed(n: int) -> Update[PStream[int], int, int]:
    if n % 3 == 0:
        return Update(lambda s: (PNIL, s))
    return Update(lambda s: (pstream_of(s + n), s * n))


IDENTITY_CASE = EffectCase("Identity", IDENTITY, Identity, IdentityOf, identity_algebra)
LATER_CASE = EffectCase("Later", LATER, delay, LaterOf)
READER_CASE = EffectCase(
    "Reader",
    READER,
    lambda n: Reader(lambda e: n + e),
    lambda c: ReaderOf(c, ENVS),
    reader_algebra(1),
)
WRITER_PSTREAM_CASE = EffectCase(
    "Writer[PStream]",
    writer(PSTREAM),
    lambda n: Writer(n, _pstream_log(n)),
    lambda c: WriterOf(c, PStreamOf()),
    writer_algebra,
)
WRITER_DFIRST_CASE = EffectCase(
    "Writer[DFirst]",
    writer(DFIRST),
    lambda n: Writer(n, dfirst(n) if n % 2 else DFIRST.empty),
    lambda c: WriterOf(c, DFirstOf()),
    writer_algebra,
)
WRITER_DLAST_CASE = EffectCase(
    "Writer[DLast]",
    writer(DLAST),
    lambda n: Writer(n, dlast(n) if n % 2 else DLAST.empty),
    lambda c: WriterOf(c, DLastOf()),
    writer_algebra,
)
UPDATE_CASE = EffectCase(
    "Update[PStream]",
    update(head_action(PSTREAM)),
    _update_embed,
    lambda c: UpdateOf(c, PStreamOf(), STATES),
    update_algebra(0),
)
CONT_CASE = EffectCase(
    "Cont[Delay]",
    cont(DELAY_STABLE),
    lambda n: Cont(lambda k: k(n)),
    ContOf,
)

EFFECT_CASES: Tuple[EffectCase, ...] = (
    IDENTITY_CASE,
    READER_CASE,
    WRITER_PSTREAM_CASE,
    WRITER_DFIRST_CASE,
    WRITER_DLAST_CASE,
    UPDATE_CASE,
    CONT_CASE,
)

FUSION_CASES: Tuple[EffectCase, ...] = tuple(c for c in EFFECT_CASES if c.algebra is not None)


def _composite(outer: EffectCase, inner: EffectCase) -> Composite:
    return Composite(outer, inner, compose(outer.effect, inner.effect))


COMPOSITES: Tuple[Composite, ...] = (
    _composite(READER_CASE, WRITER_DFIRST_CASE),
    _composite(WRITER_PSTREAM_CASE, READER_CASE),
    _composite(IDENTITY_CASE, UPDATE_CASE),
)


def _double_log(w: Writer[PStream[int], Any]) -> Writer[PStream[int], Any]:
    return Writer(w.value, pmap(lambda x: 2 * x, w.log))


def _shift_env(r: Reader[int, Any]) -> Reader[int, Any]:
    return Reader(lambda e: r.run(e + 1))


def _identity_to_reader(i: Identity[Any]) -> Reader[int, Any]:
    return Reader(lambda _: i.value)


MORPHISMS: Tuple[Morphism, ...] = (
    Morphism("Writer[PStream] log doubling", WRITER_PSTREAM_CASE, WRITER_PSTREAM_CASE, _double_log),
    Morphism("Reader environment shift", READER_CASE, READER_CASE, _shift_env),
    Morphism("Identity to Reader", IDENTITY_CASE, READER_CASE, _identity_to_reader),
)


STREAM_KIT = TraversableKit("stream", smap, isequence_stream, StreamOf, finite_stream)
ITREE_KIT = TraversableKit("itree", itree_map, isequence_itree, ITreeOf, finite_itree)
BISTREAM_KIT = TraversableKit("bistream", bistream_map, isequence_bistream, BistreamOf, finite_bistream)

KITS: Tuple[TraversableKit, ...] = (STREAM_KIT, ITREE_KIT, BISTREAM_KIT)


def effect_lists(case: EffectCase, seed: int, count: int, max_len: int = 8) -> List[List[Any]]:
    """Finite lists of effect values for the fusion oracle."""
    return [[case.embed(n) for n in xs] for xs in int_lists(seed, count, max_len)]


def function_effects(case: EffectCase, seed: int, count: int) -> List[Any]:
    """Effects carrying ``int -> int`` functions, for applicative-law samples."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(-3, 3)
        out.append(case.effect.map(lambda n, k=k: (lambda x: x * k + n), case.sample(rng)))
    return out


def values(case: EffectCase, seed: int, count: int) -> List[Any]:
    rng = random.Random(seed)
    return [case.embed(0)] + [case.sample(rng) for _ in range(count - 1)]


def index_pairs(seed: int, count: int, limit: int = 50) -> List[Tuple[int, int]]:
    rng = random.Random(seed)
    return [(rng.randint(0, limit), rng.randint(0, limit)) for _ in range(count)]


def pairs_of(items: Sequence[Any], seed: int, count: int) -> List[Tuple[Any, Any]]:
    rng = random.Random(seed)
    return [(rng.choice(items), rng.choice(items)) for _ in range(count)]


def triples_of(items: Sequence[Any], seed: int, count: int) -> List[Tuple[Any, Any, Any]]:
    rng = random.Random(seed)
    return [(rng.choice(items), rng.choice(items), rng.choice(items)) for _ in range(count)]


__all__ = [
    "BISTREAM_KIT",
    "COMPOSITES",
    "CONT_CASE",
    "EFFECT_CASES",
    "ENVS",
    "FUSION_CASES",
    "IDENTITY_CASE",
    "ITREE_KIT",
    "KITS",
    "LATER_CASE",
    "MORPHISMS",
    "READER_CASE",
    "STATES",
    "STREAM_KIT",
    "UPDATE_CASE",
    "WRITER_DFIRST_CASE",
    "WRITER_DLAST_CASE",
    "WRITER_PSTREAM_CASE",
    "budgets",
    "delays",
    "dfirsts",
    "dlasts",
    "effect_lists",
    "finite_bistream",
    "finite_itree",
    "finite_stream",
    "function_effects",
    "index_pairs",
    "int_lists",
    "pairs_of",
    "prompt_pstreams",
    "pstreams",
    "suspended",
    "triples_of",
    "values",
    "wait_free_pstreams",
]
