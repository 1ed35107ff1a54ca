"""Algebraic laws checked up to evaluated bisimilarity on finite samples."""
from __future__ import annotations

from typing import Any, Callable, Iterable, List, Sequence, Tuple

from toolz import curry, identity

from .effects import ApplyAction, EffectDict, Update, update_bind
from .evaluation import Carrier, Finding, ObsBudget, Report, bisimilar, draw_samples, leval
from .monoids import Monoid


def _law(
    report: Report,
    name: str,
    index: int,
    left: Callable[[], Any],
    right: Callable[[], Any],
    carrier: Carrier,
    budgets: Sequence[ObsBudget],
) -> None:
    try:
        lhs, rhs = left(), right()
    except Exception as e:
        report.findings.append(Finding(name, index, None, "both sides build", f"raised: {e!r}"))
        return
    for budget in budgets:
        if not bisimilar(lhs, rhs, carrier, budget=budget):
            report.findings.append(
                Finding(name, index, budget, leval(lhs, carrier, budget).result, leval(rhs, carrier, budget).result)
            )
            return


def check_monoid_laws(
    monoid: Monoid[Any],
    carrier: Carrier,
    samples: Iterable[Any],
    budgets: Sequence[ObsBudget],
    seed_triples: Callable[[List[Any]], Iterable[Tuple[Any, Any, Any]]],
) -> Report:
    """Left and right identity on every sample, associativity on drawn triples."""
    drawn, findings = draw_samples(samples, "monoid")
    report = Report("monoid", monoid.name, len(drawn), findings)
    append, empty = monoid.append, monoid.empty
    for i, x in enumerate(drawn):
        _law(report, "left identity", i, lambda: append(empty, x), lambda: x, carrier, budgets)
        _law(report, "right identity", i, lambda: append(x, empty), lambda: x, carrier, budgets)
    for i, (x, y, z) in enumerate(seed_triples(drawn)):
        _law(
            report,
            "associativity",
            i,
            lambda: append(append(x, y), z),
            lambda: append(x, append(y, z)),
            carrier,
            budgets,
        )
    return report


def check_action_laws(
    action: ApplyAction[Any, Any],
    pairs: Iterable[Tuple[Any, Any]],
    states: Sequence[Any],
) -> Report:
    """``act(mempty)`` is the identity and ``act(p <> q) = act(p) . act(q)``.

    Samples must be free of ``PWait``; the head action inspects constructors
    and is not invariant under delay.
    """
    drawn, findings = draw_samples(pairs, "action")
    report = Report("action", f"apply_action[{action.monoid.name}]", len(drawn), findings)
    act, monoid = action.act, action.monoid
    for i, (p, q) in enumerate(drawn):
        for s in states:
            if act(monoid.empty, s) != s:
                report.findings.append(Finding("action identity", i, None, s, act(monoid.empty, s)))
            lhs = act(monoid.append(p, q), s)
            rhs = act(p, act(q, s))
            if lhs != rhs:
                report.findings.append(Finding("action composition", i, None, rhs, lhs))
    report.details = {"order": "act(p <> q) = act(p) . act(q)"}
    return report


def right_action_witness(
    action: ApplyAction[Any, Any], p: Any, q: Any, s: Any
) -> Tuple[Any, Any]:
    """Both sides of ``act(p <> q, s) = act(q, act(p, s))``; they differ for the head action."""
    return action.act(action.monoid.append(p, q), s), action.act(q, action.act(p, s))


_compose = curry(lambda f, g, x: f(g(x)))


def check_applicative_laws(
    eff: EffectDict,
    carrier: Carrier,
    values: Sequence[Any],
    functions: Sequence[Any],
    budgets: Sequence[ObsBudget],
) -> Report:
    """Identity, homomorphism, interchange and composition for ``eff``."""
    report = Report("applicative", eff.name, len(values))
    pure, ap = eff.pure, eff.apply
    for i, v in enumerate(values):
        _law(report, "identity", i, lambda: ap(pure(identity), v), lambda: v, carrier, budgets)
        _law(
            report,
            "homomorphism",
            i,
            lambda: ap(pure(lambda x: x + 1), pure(i)),
            lambda: pure(i + 1),
            carrier,
            budgets,
        )
    for i, u in enumerate(functions):
        _law(
            report,
            "interchange",
            i,
            lambda: ap(u, pure(i)),
            lambda: ap(pure(lambda f: f(i)), u),
            carrier,
            budgets,
        )
        v = functions[(i + 1) % len(functions)]
        w = values[i % len(values)]
        _law(
            report,
            "composition",
            i,
            lambda: ap(ap(ap(pure(_compose), u), v), w),
            lambda: ap(u, ap(v, w)),
            carrier,
            budgets,
        )
    return report


def check_update_monad_laws(
    action: ApplyAction[Any, Any],
    carrier: Carrier,
    updates: Sequence[Update[Any, Any, Any]],
    continuation: Callable[[Any], Update[Any, Any, Any]],
    budgets: Sequence[ObsBudget],
) -> Report:
    """Left and right identity of bind, observed at the carrier's states."""
    report = Report("update-monad", f"Update[{action.monoid.name}]", len(updates))

    def pure(a: Any) -> Update[Any, Any, Any]:
        return Update(lambda _: (action.monoid.empty, a))

    for i, m in enumerate(updates):
        _law(
            report,
            "left identity",
            i,
            lambda: update_bind(pure(i), continuation, action),
            lambda: continuation(i),
            carrier,
            budgets,
        )
        _law(report, "right identity", i, lambda: update_bind(m, pure, action), lambda: m, carrier, budgets)
    return report


__all__ = [
    "check_action_laws",
    "check_applicative_laws",
    "check_monoid_laws",
    "check_update_monad_laws",
    "right_action_witness",
]
