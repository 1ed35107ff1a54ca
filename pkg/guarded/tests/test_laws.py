"""Tests for monoid, action, applicative and update-monad law checkers."""

from __future__ import annotations

from guarded.checks.laws import SUM_ACTION, UPDATE_SUM_CASE
from guarded.data import pstream_of
from guarded.effects import IDENTITY, Identity, head_action
from guarded.evaluation import GROUND, DFirstOf, IdentityOf, PStreamOf, UpdateOf
from guarded.generators import (
    STATES,
    UPDATE_CASE,
    budgets,
    dfirsts,
    function_effects,
    pairs_of,
    triples_of,
    values,
    wait_free_pstreams,
)
from guarded.laws import (
    check_action_laws,
    check_applicative_laws,
    check_monoid_laws,
    check_update_monad_laws,
    right_action_witness,
)
from guarded.monoids import DFIRST, PSTREAM

BUDGETS = budgets(4, 500)
HEAD = head_action(PSTREAM)


class TestMonoidLaws:
    """Identity and associativity up to bisimilarity."""

    def test_pstream(self) -> None:
        samples = wait_free_pstreams(0, 12)
        report = check_monoid_laws(
            PSTREAM, PStreamOf(), samples, BUDGETS, lambda xs: triples_of(xs, 0, 20)
        )
        assert report.passed
        assert report.samples == 12

    def test_dfirst_with_waits(self) -> None:
        report = check_monoid_laws(
            DFIRST, DFirstOf(), dfirsts(1, 12), BUDGETS, lambda xs: triples_of(xs, 1, 20)
        )
        assert report.passed

    def test_raising_generator_becomes_a_finding(self) -> None:
        def broken():
            yield pstream_of(1)
            raise RuntimeError("no more samples")

        report = check_monoid_laws(PSTREAM, PStreamOf(), broken(), BUDGETS, lambda xs: [])
        assert report.samples == 1
        assert not report.passed


class TestActionLaws:
    """The head action is a left action on wait-free streams."""

    def test_head_action_is_a_left_action(self) -> None:
        pairs = pairs_of(wait_free_pstreams(2, 10), 2, 30)
        assert check_action_laws(HEAD, pairs, STATES).passed

    def test_right_action_order_fails(self) -> None:
        assert right_action_witness(HEAD, pstream_of(1), pstream_of(2), 0) == (1, 2)

    def test_sum_action_is_lawful(self) -> None:
        pairs = [(1, 2), (0, 5), (-3, 3)]
        assert check_action_laws(SUM_ACTION, pairs, (0, 7)).passed


class TestApplicativeLaws:
    """Applicative laws on effect samples."""

    def test_identity_effect(self) -> None:
        report = check_applicative_laws(
            IDENTITY,
            IdentityOf(),
            [Identity(1), Identity(2)],
            [Identity(lambda x: x + 1), Identity(lambda x: 2 * x)],
            BUDGETS,
        )
        assert report.passed

    def test_update_over_sum(self) -> None:
        carrier = UPDATE_SUM_CASE.carrier(GROUND)
        report = check_applicative_laws(
            UPDATE_SUM_CASE.effect,
            carrier,
            values(UPDATE_SUM_CASE, 0, 10),
            function_effects(UPDATE_SUM_CASE, 0, 10),
            BUDGETS,
        )
        assert report.passed

    def test_update_over_the_head_action_breaks_composition(self) -> None:
        report = check_applicative_laws(
            UPDATE_CASE.effect,
            UPDATE_CASE.carrier(GROUND),
            values(UPDATE_CASE, 0, 30),
            function_effects(UPDATE_CASE, 0, 30),
            BUDGETS,
        )
        assert {f.check for f in report.findings} == {"composition"}


class TestUpdateMonadLaws:
    """Bind identities for Update."""

    def test_identities_hold_for_the_head_action(self) -> None:
        carrier = UpdateOf(GROUND, PStreamOf(), STATES)
        updates = values(UPDATE_CASE, 0, 10)
        report = check_update_monad_laws(
            HEAD, carrier, updates, lambda a: UPDATE_CASE.embed(a + 1), BUDGETS
        )
        assert report.passed
