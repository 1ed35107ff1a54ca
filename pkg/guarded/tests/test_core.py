"""Tests for the Later modality, lfix and the forcing capability."""

from __future__ import annotations

import pytest

from guarded.core import (
    EXHAUSTED,
    Exhausted,
    Fuel,
    Fusible,
    MetatheoryToken,
    delay,
    force,
    lap,
    lfix,
)
from guarded.data import repeat_forever
from guarded.errors import BudgetError, CapabilityError, GuardednessError
from guarded.evaluation import LaterOf, ObsBudget, Seq, StreamOf, Terminator, leval


ONE_TICK = ObsBudget(depth=0, fuel=1)


class Shift(Fusible):
    """Adds a constant; consecutive shifts fuse into one."""

    __slots__ = ("by", "calls")

    def __init__(self, by: int, calls: list) -> None:
        self.by = by
        self.calls = calls

    def __call__(self, value: int) -> int:
        self.calls.append(self.by)
        return value + self.by

    def then(self, after):
        if isinstance(after, Shift):
            return Shift(self.by + after.by, self.calls)
        return None


# =============================================================================
# Later
# =============================================================================


class TestLater:
    """Suspensions built in the guarded fragment."""

    def test_delay_is_one_tick_deep(self) -> None:
        obs = leval(delay(3), LaterOf(), ONE_TICK)
        assert obs.result == 3
        assert obs.fuel_used == 1

    def test_no_fuel_means_bottom(self) -> None:
        obs = leval(delay(3), LaterOf(), ObsBudget(0, 0))
        assert obs.result is EXHAUSTED
        assert obs.fuel_used == 0

    def test_map_stays_in_the_same_tick(self) -> None:
        mapped = delay(2).map(lambda x: x + 1).map(lambda x: x * 10)
        obs = leval(mapped, LaterOf(), ONE_TICK)
        assert obs.result == 30
        assert obs.fuel_used == 1

    def test_lap_applies_under_later(self) -> None:
        assert leval(lap(delay(lambda x: x * 2), delay(5)), LaterOf(), ONE_TICK).result == 10

    def test_ap_method_matches_lap(self) -> None:
        assert leval(delay(lambda x: -x).ap(delay(4)), LaterOf(), ONE_TICK).result == -4

    def test_long_map_chain_does_not_recurse(self) -> None:
        x = delay(0)
        for _ in range(50_000):
            x = x.map(lambda n: n + 1)
        assert leval(x, LaterOf(), ONE_TICK).result == 50_000

    def test_suspension_is_memoized(self) -> None:
        calls = []
        x = delay(1).map(lambda n: calls.append(n) or n)
        leval(x, LaterOf(), ONE_TICK)
        leval(x, LaterOf(), ONE_TICK)
        assert calls == [1]

    def test_repr_shows_pending_then_value(self) -> None:
        x = delay(1).map(lambda n: n + 1)
        assert repr(x) == "Later(<pending>)"
        leval(x, LaterOf(), ONE_TICK)
        assert repr(x) == "Later(2)"

    def test_fusible_maps_on_a_pending_suspension_fuse(self) -> None:
        calls: list = []
        x = delay(0).map(Shift(1, calls)).map(Shift(2, calls)).map(Shift(3, calls))
        obs = leval(x.map(lambda n: n * 10), LaterOf(), ONE_TICK)
        assert obs.result == 60
        assert obs.fuel_used == 1
        assert calls == [6]

    def test_forced_suspension_maps_without_fusing(self) -> None:
        calls: list = []
        x = delay(0).map(Shift(1, calls))
        leval(x, LaterOf(), ONE_TICK)
        assert leval(x.map(Shift(2, calls)), LaterOf(), ONE_TICK).result == 3
        assert calls == [1, 2]


# =============================================================================
# Guarded fixpoint
# =============================================================================


class TestLfix:
    """Recursion through lfix."""

    def test_repeat_forever_observes_five_ones(self) -> None:
        obs = leval(repeat_forever(1), StreamOf(), ObsBudget(depth=5, fuel=100))
        assert obs.result == Seq((1, 1, 1, 1, 1), Terminator.TRUNCATED)
        assert obs.fuel_used == 5

    def test_demanding_the_knot_early_is_a_guardedness_error(self) -> None:
        with pytest.raises(GuardednessError):
            lfix(lambda rec: leval(rec, LaterOf(), ONE_TICK))


# =============================================================================
# Capability and fuel
# =============================================================================


class TestCapability:
    """force is only reachable through the evaluation capability."""

    def test_force_rejects_a_missing_capability(self) -> None:
        with pytest.raises(CapabilityError):
            force(delay(1), Fuel(1), object())  # type: ignore[arg-type]

    def test_tokens_cannot_be_minted(self) -> None:
        with pytest.raises(CapabilityError):
            MetatheoryToken(object())

    def test_negative_fuel_is_rejected(self) -> None:
        with pytest.raises(BudgetError):
            Fuel(-1)

    def test_exhausted_is_a_singleton_rendered_as_bottom(self) -> None:
        assert Exhausted() is EXHAUSTED
        assert repr(EXHAUSTED) == "⊥"
