"""Tests for applicative effects and their predict instances."""

from __future__ import annotations

import operator

import pytest

from guarded.core import delay
from guarded.data import NOTHING, PNIL, Just, PWait, pstream_of
from guarded.demos import UPDATE, transducer_step
from guarded.effects import (
    IDENTITY,
    LATER,
    LIST,
    MAYBE,
    READER,
    ZIPLIST,
    Cont,
    Identity,
    Reader,
    Writer,
    ZipList,
    apply_action_head,
    ask,
    compose,
    cont,
    predict_maybe_candidate,
    predict_reader,
    prod,
    tell,
    writer,
)
from guarded.evaluation import (
    GROUND,
    ContOf,
    LaterOf,
    ObsBudget,
    PStreamOf,
    Seq,
    Terminator,
    leval,
)
from guarded.monoids import DELAY_STABLE, DFIRST, PSTREAM, SUM

ROOMY = ObsBudget(depth=8, fuel=100)


# =============================================================================
# Applicative structure
# =============================================================================


class TestApplicatives:
    """pure, map and apply through lift_a2."""

    def test_identity(self) -> None:
        assert IDENTITY.lift_a2(operator.add, Identity(1), Identity(2)) == Identity(3)

    def test_reader_shares_the_environment(self) -> None:
        r = READER.lift_a2(operator.add, ask(), READER.pure(10))
        assert r.run(5) == 15

    def test_writer_logs_left_to_right(self) -> None:
        eff = writer(PSTREAM)
        w = eff.lift_a2(operator.add, Writer(1, pstream_of(1)), Writer(2, pstream_of(2)))
        assert w.value == 3
        assert leval(w.log, PStreamOf(), ROOMY).result == Seq((1, 2), Terminator.ENDED)

    def test_tell_writes_only_the_log(self) -> None:
        w = tell(pstream_of(9))
        assert w.value is None
        assert leval(w.log, PStreamOf(), ROOMY).result == Seq((9,), Terminator.ENDED)

    def test_list_is_cartesian(self) -> None:
        assert LIST.lift_a2(operator.add, [1, 2], [10, 20]) == [11, 21, 12, 22]

    def test_ziplist_pure_cycles(self) -> None:
        z = ZIPLIST.lift_a2(operator.add, ZipList((1, 2, 3)), ZIPLIST.pure(10))
        assert z == ZipList((11, 12, 13))

    def test_maybe_short_circuits(self) -> None:
        assert MAYBE.lift_a2(operator.add, Just(1), NOTHING) is NOTHING
        assert MAYBE.lift_a2(operator.add, Just(1), Just(2)) == Just(3)

    def test_cont_runs_with_terminal_now(self) -> None:
        c = cont(DELAY_STABLE).lift_a2(operator.mul, Cont(lambda k: k(3)), Cont(lambda k: k(4)))
        assert leval(c, ContOf(GROUND), ROOMY).result == 12


# =============================================================================
# predict
# =============================================================================


class TestPredict:
    """Which effects are predictable, and what predict does."""

    def test_nonexamples_have_no_predict(self) -> None:
        for eff in (MAYBE, LIST, ZIPLIST):
            assert not eff.predictable

    def test_writer_needs_a_stable_log(self) -> None:
        assert not writer(SUM).predictable
        assert writer(PSTREAM).predictable
        assert writer(DFIRST).predictable

    def test_cont_needs_a_stable_answer(self) -> None:
        assert not cont().predictable
        assert cont(DELAY_STABLE).predictable

    def test_products_and_composites_need_both_sides(self) -> None:
        assert not prod(MAYBE, READER).predictable
        assert prod(READER, writer(PSTREAM)).predictable
        assert compose(READER, writer(DFIRST)).predictable
        assert not compose(READER, LIST).predictable

    def test_later_predict_is_identity(self) -> None:
        x = delay(delay(1))
        assert LATER.predict(x) is x

    def test_predict_reader_pushes_later_inside(self) -> None:
        predicted = predict_reader(delay(Reader(lambda e: e * 2)))
        assert leval(predicted.run(3), LaterOf(), ROOMY).result == 6

    def test_predict_writer_delays_the_log(self) -> None:
        predicted = writer(PSTREAM).predict(delay(Writer(1, pstream_of(9))))
        assert isinstance(predicted.log, PWait)
        obs = leval(predicted.log, PStreamOf(), ROOMY)
        assert obs.result == Seq((9,), Terminator.ENDED)
        assert obs.fuel_used == 1
        assert leval(predicted.value, LaterOf(), ROOMY).result == 1

    def test_maybe_candidate_guesses_just(self) -> None:
        assert isinstance(predict_maybe_candidate(delay(NOTHING)), Just)


# =============================================================================
# Update
# =============================================================================


class TestUpdate:
    """Update with the head action."""

    def test_head_action_reads_an_immediate_head(self) -> None:
        assert apply_action_head(pstream_of(7, 8), 0) == 7

    def test_head_action_leaves_state_on_empty_or_waiting(self) -> None:
        assert apply_action_head(PNIL, 3) == 3
        assert apply_action_head(PWait(delay(pstream_of(1))), 3) == 3

    def test_transducer_step(self) -> None:
        log, value = transducer_step().run(4)
        assert value == 5
        assert leval(log, PStreamOf(), ROOMY).result == Seq((5,), Terminator.ENDED)

    def test_update_pure_writes_nothing(self) -> None:
        log, value = UPDATE.pure("x").run(9)
        assert value == "x"
        assert log is PNIL

    @pytest.mark.parametrize("s0", [0, 3, -2])
    def test_update_apply_threads_state(self, s0: int) -> None:
        both = UPDATE.lift_a2(lambda a, b: (a, b), transducer_step(), transducer_step())
        log, value = both.run(s0)
        assert value == (s0 + 1, s0 + 2)
        assert leval(log, PStreamOf(), ROOMY).result == Seq((s0 + 1, s0 + 2), Terminator.ENDED)
