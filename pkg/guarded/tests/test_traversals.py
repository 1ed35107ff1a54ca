"""Tests for the infinite traversals and the law harness built on them."""

from __future__ import annotations

import pytest

from guarded.core import EXHAUSTED, Value, delay
from guarded.data import (
    NOTHING,
    Bistream,
    ILeaf,
    ITBranch,
    Just,
    repeat_forever,
    stream_of,
    tabulate,
)
from guarded.demos import UPDATE, transducer_step
from guarded.effects import (
    IDENTITY,
    LIST,
    MAYBE,
    READER,
    ZIPLIST,
    Identity,
    Reader,
    Writer,
    ZipList,
    ask,
    writer,
)
from guarded.errors import GuardednessError
from guarded.evaluation import (
    BistreamOf,
    Branch,
    IdentityOf,
    ITreeOf,
    Leaf,
    ObsBudget,
    PairOf,
    PStreamOf,
    Seq,
    StreamOf,
    Terminator,
    leval,
)
from guarded.generators import (
    COMPOSITES,
    FUSION_CASES,
    MORPHISMS,
    READER_CASE,
    STREAM_KIT,
    budgets,
    effect_lists,
)
from guarded.monoids import TUPLE
from guarded.traversals import (
    backquence_list,
    LinearBound,
    check_traversal_laws,
    fusion_check,
    ibackquence,
    isequence_bistream,
    isequence_itree,
    isequence_later,
    isequence_stream,
    measure_productivity,
    observe_forced,
    reader_algebra,
    sequence_forced,
    sequence_list_oracle,
    transpose_infinite,
)

FIVE = ObsBudget(depth=5, fuel=1000)


# =============================================================================
# Forward and backward traversal
# =============================================================================


class TestIsequence:
    """Productive traversals at predictable effects."""

    def test_reader_repeat_reads_the_environment(self) -> None:
        traversed = isequence_stream(repeat_forever(ask()), READER)
        assert leval(traversed.run(1), StreamOf(), FIVE).result == Seq(
            (1, 1, 1, 1, 1), Terminator.TRUNCATED
        )

    def test_state_transducer_counts_up(self) -> None:
        log, values = isequence_stream(repeat_forever(transducer_step()), UPDATE).run(0)
        assert leval(values, StreamOf(), FIVE).result == Seq((1, 2, 3, 4, 5), Terminator.TRUNCATED)
        assert leval(log, PStreamOf(), FIVE).result == Seq((1, 2, 3, 4, 5), Terminator.TRUNCATED)

    def test_backward_transducer_never_logs(self) -> None:
        log, values = ibackquence(repeat_forever(transducer_step()), UPDATE).run(0)
        assert leval(values, StreamOf(), FIVE).result == Seq((1, 1, 1, 1, 1), Terminator.TRUNCATED)
        assert leval(log, PStreamOf(), FIVE).result == Seq((), Terminator.EXHAUSTED)

    def test_finite_stream_at_identity(self) -> None:
        traversed = isequence_stream(stream_of(Identity(1), Identity(2)), IDENTITY)
        assert leval(traversed, IdentityOf(StreamOf()), FIVE).result == Seq(
            (1, 2), Terminator.ENDED
        )

    def test_backward_at_reader_agrees_on_finite_streams(self) -> None:
        traversed = ibackquence(stream_of(ask(), ask()), READER)
        assert leval(traversed.run(4), StreamOf(), FIVE).result == Seq((4, 4), Terminator.ENDED)

    def test_itree(self) -> None:
        t = ITBranch(delay(ILeaf(Identity(1))), delay(ILeaf(Identity(2))))
        traversed = isequence_itree(t, IDENTITY)
        assert leval(traversed, IdentityOf(ITreeOf()), FIVE).result == Branch(Leaf(1), Leaf(2))

    def test_bistream(self) -> None:
        b = Bistream(stream_of(Identity(1)), stream_of(Identity(2), Identity(3)))
        traversed = isequence_bistream(b, IDENTITY)
        assert leval(traversed, IdentityOf(BistreamOf()), FIVE).result == (
            Seq((1,), Terminator.ENDED),
            Seq((2, 3), Terminator.ENDED),
        )

    def test_later_traversal_is_predict(self) -> None:
        traversed = isequence_later(delay(Identity(7)), IDENTITY)
        assert isinstance(traversed, Identity)

    def test_transpose_column(self) -> None:
        columns = transpose_infinite(tabulate(lambda i: Reader(lambda j, i=i: (i, j))))
        obs = leval(columns.run(2), StreamOf(PairOf()), ObsBudget(3, 10))
        assert obs.result == Seq(((0, 2), (1, 2), (2, 2)), Terminator.TRUNCATED)


# =============================================================================
# Nonexamples
# =============================================================================


class TestUnpredictable:
    """Effects without predict only sequence by forcing."""

    @pytest.mark.parametrize("item, eff", [
        (Just(1), MAYBE),
        ([1, 2], LIST),
        (ZipList((1, 2)), ZIPLIST),
    ])
    def test_isequence_is_refused(self, item, eff) -> None:
        with pytest.raises(GuardednessError):
            isequence_stream(repeat_forever(item), eff)

    @pytest.mark.parametrize("fuel", [10, 100, 1000])
    def test_forced_sequence_of_an_infinite_stream_is_bottom(self, fuel: int) -> None:
        assert sequence_forced(repeat_forever(Just(1)), MAYBE, fuel) is EXHAUSTED

    def test_forced_sequence_of_a_finite_stream(self) -> None:
        assert sequence_forced(stream_of(Just(1), Just(2)), MAYBE, 10) == Value(Just([1, 2]))

    def test_forced_sequence_reports_the_fuel_it_spent(self) -> None:
        assert observe_forced(stream_of(Just(1), Just(2)), MAYBE, 10).fuel_used == 2
        assert observe_forced(repeat_forever(Just(1)), MAYBE, 10).fuel_used == 10

    def test_list_oracle_with_nothing(self) -> None:
        assert sequence_list_oracle([Just(1), NOTHING], MAYBE) is NOTHING

    def test_backquence_list_runs_effects_in_reverse(self) -> None:
        w = backquence_list([Writer(1, (1,)), Writer(2, (2,))], writer(TUPLE))
        assert (w.value, w.log) == ([1, 2], (2, 1))


# =============================================================================
# Harness
# =============================================================================


class TestHarness:
    """Laws, fusion and productivity on small samples."""

    def test_stream_traversal_laws_hold(self) -> None:
        reports = check_traversal_laws(
            STREAM_KIT, COMPOSITES, MORPHISMS, 0, 10, budgets(4, 500)
        )
        assert len(reports) == 1 + len(COMPOSITES) + len(MORPHISMS)
        assert [r.law for r in reports if not r.passed] == []

    @pytest.mark.parametrize("case", FUSION_CASES, ids=lambda c: c.name)
    def test_fusion_against_the_list_oracle(self, case) -> None:
        report = fusion_check(case, effect_lists(case, 0, 20), ObsBudget(8, 2000))
        assert report.passed, report.findings[:1]

    def test_reader_productivity_is_linear(self) -> None:
        report = measure_productivity(
            lambda: isequence_stream(repeat_forever(ask()), READER),
            reader_algebra(1),
            (1, 2, 4, 8),
            1000,
            LinearBound(2, 4),
            subject="Reader",
        )
        assert report.passed
        assert report.details["fuel_used"][8] <= 20

    def test_linear_bound(self) -> None:
        assert LinearBound(2, 4).allows(8, 20)
        assert not LinearBound(2, 4).allows(8, 21)

    def test_reader_case_sample_runs(self) -> None:
        assert READER_CASE.embed(3).run(1) == 4
