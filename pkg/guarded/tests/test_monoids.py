"""Tests for monoids, stable carriers and infinite chains."""

from __future__ import annotations

import time

import pytest

from guarded.core import EXHAUSTED, delay
from guarded.data import NOTHING, PNIL, Just, Now, PCons, PWait, pstream_of, wait_n
from guarded.evaluation import (
    DelayOf,
    DFirstOf,
    DLastOf,
    ObsBudget,
    PStreamOf,
    Seq,
    Terminator,
    delay_depth,
    leval,
)
from guarded.monoids import (
    DFIRST,
    DLAST,
    PSTREAM,
    SUM,
    TUPLE,
    delay_monoid,
    dfirst,
    dlast,
    left_nested_chain,
    right_nested_chain,
    wait_pad,
)

ROOMY = ObsBudget(depth=8, fuel=100)
DIVERGENT = ObsBudget(depth=8, fuel=10_000)
DESK_SECONDS = 10.0


class TestPlainMonoids:
    """Monoids without a stable carrier."""

    def test_sum_concat(self) -> None:
        assert SUM.concat([1, 2, 3]) == 6

    def test_tuple_concat_keeps_order(self) -> None:
        assert TUPLE.concat([(1,), (2, 3)]) == (1, 2, 3)

    def test_infinite_chain_needs_a_stable_monoid(self) -> None:
        with pytest.raises(TypeError):
            right_nested_chain(SUM, lambda n: n)


class TestPStreamMonoid:
    """Append on productive streams."""

    def test_append_wait_free(self) -> None:
        joined = PSTREAM.append(pstream_of(1, 2), pstream_of(3))
        assert leval(joined, PStreamOf(), ROOMY).result == Seq((1, 2, 3), Terminator.ENDED)

    def test_append_through_a_wait(self) -> None:
        joined = PSTREAM.append(PCons(1, PWait(delay(pstream_of(2)))), pstream_of(3))
        obs = leval(joined, PStreamOf(), ROOMY)
        assert obs.result == Seq((1, 2, 3), Terminator.ENDED)
        assert obs.fuel_used == 1

    def test_empty_is_pnil(self) -> None:
        assert leval(PSTREAM.empty, PStreamOf(), ROOMY).result == Seq((), Terminator.ENDED)

    def test_pnil_is_a_two_sided_identity(self) -> None:
        xs = pstream_of(1, 2)
        assert PSTREAM.append(xs, PNIL) is xs
        assert PSTREAM.append(PNIL, xs) is xs

    def test_left_nested_appends_through_waits(self) -> None:
        joined = PNIL
        for n in range(3):
            joined = PSTREAM.append(PWait(delay(joined)), pstream_of(n))
        obs = leval(joined, PStreamOf(), ROOMY)
        assert obs.result == Seq((0, 1, 2), Terminator.ENDED)
        assert obs.fuel_used == 3


class TestDelayMonoid:
    """Delay lifted over an inner monoid."""

    def test_waits_add_up(self) -> None:
        monoid = delay_monoid(SUM)
        joined = monoid.append(wait_n(Now(2), 2), wait_n(Now(3), 1))
        assert leval(joined, DelayOf(), ROOMY).result == 5
        assert delay_depth(joined, 10).value == 3

    def test_empty_is_now_of_inner_empty(self) -> None:
        assert delay_monoid(SUM).empty == Now(0)

    def test_now_of_inner_empty_is_a_two_sided_identity(self) -> None:
        monoid = delay_monoid(SUM)
        waiting = wait_n(Now(4), 2)
        assert monoid.append(waiting, Now(0)) is waiting
        assert monoid.append(Now(0), waiting) is waiting


class TestBiasedMonoids:
    """DFirst and DLast settle on one side."""

    def test_dfirst_keeps_the_first_value(self) -> None:
        joined = DFIRST.append(dfirst(1), dfirst(2))
        assert leval(joined, DFirstOf(), ROOMY).result == Just(1)

    def test_dfirst_skips_an_empty_left(self) -> None:
        joined = DFIRST.append(DFIRST.empty, dfirst(2))
        assert leval(joined, DFirstOf(), ROOMY).result == Just(2)

    def test_dlast_keeps_the_last_value(self) -> None:
        joined = DLAST.append(dlast(1), dlast(2))
        assert leval(joined, DLastOf(), ROOMY).result == Just(2)

    def test_dlast_skips_an_empty_right(self) -> None:
        joined = DLAST.append(dlast(1), DLAST.empty)
        assert leval(joined, DLastOf(), ROOMY).result == Just(1)

    def test_empties_observe_as_nothing(self) -> None:
        assert leval(DFIRST.empty, DFirstOf(), ROOMY).result is NOTHING
        assert leval(DLAST.empty, DLastOf(), ROOMY).result is NOTHING

    def test_wait_pad_adds_layers(self) -> None:
        padded = wait_pad(DFIRST.stable, dfirst(3), 2)
        assert delay_depth(padded.payload, 10).value == 2
        assert leval(padded, DFirstOf(), ROOMY).result == Just(3)


class TestChains:
    """Infinitely nested appends settle only on the biased side."""

    def test_dfirst_right_nested_settles(self) -> None:
        chain = right_nested_chain(DFIRST, dfirst)
        obs = leval(chain, DFirstOf(), ObsBudget(0, 3))
        assert obs.result == Just(0)
        assert obs.fuel_used == 0

    def test_dfirst_left_nested_diverges(self) -> None:
        chain = left_nested_chain(DFIRST, dfirst)
        assert leval(chain, DFirstOf(), DIVERGENT).result is EXHAUSTED

    def test_dlast_left_nested_settles(self) -> None:
        chain = left_nested_chain(DLAST, dlast)
        assert leval(chain, DLastOf(), ObsBudget(0, 3)).result == Just(0)

    def test_dlast_right_nested_diverges(self) -> None:
        chain = right_nested_chain(DLAST, dlast)
        assert leval(chain, DLastOf(), DIVERGENT).result is EXHAUSTED

    def test_dfirst_left_nested_reaches_a_deep_value(self) -> None:
        joined = dfirst(7)
        for n in range(3):
            joined = DFIRST.append(DFIRST.wait(delay(joined)), dfirst(n))
        assert leval(joined, DFirstOf(), ROOMY).result == Just(7)

    def test_dlast_right_nested_falls_back_to_the_nearest_left(self) -> None:
        joined = DLAST.empty
        for n in range(3):
            joined = DLAST.append(dlast(n), DLAST.wait(delay(joined)))
        assert leval(joined, DLastOf(), ROOMY).result == Just(0)

    @pytest.mark.parametrize("monoid, nested, unit, carrier", [
        (DFIRST, left_nested_chain, dfirst, DFirstOf),
        (DLAST, right_nested_chain, dlast, DLastOf),
    ], ids=["dfirst-left", "dlast-right"])
    def test_divergent_chain_runs_out_at_desk_scale(self, monoid, nested, unit, carrier) -> None:
        started = time.monotonic()
        obs = leval(nested(monoid, unit), carrier(), DIVERGENT)
        assert obs.result is EXHAUSTED
        assert obs.fuel_used == DIVERGENT.fuel
        assert time.monotonic() - started < DESK_SECONDS
