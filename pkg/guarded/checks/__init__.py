"""Export all law-suite checks in run order."""
from .evaluation import eval_examples_check, eval_monotonicity_check, eval_right_inverse_check
from .gwbeq import (
    gwbeq_closure_check,
    gwbeq_maybe_candidate_check,
    gwbeq_predicts_check,
    gwbeq_waits_check,
)
from .invariance import invariance_flagged_check, invariance_preserved_check
from .monoid import monoid_action_check, monoid_chains_check, monoid_laws_check
from .laws import (
    laws_applicative_check,
    laws_bistream_check,
    laws_itree_check,
    laws_stream_check,
    laws_update_monad_check,
)
from .fusion import fusion_check_all
from .productivity import productivity_check
from .promptness import promptness_check
from .transpose import transpose_check
from .negative import negative_bottoms_check, negative_forced_check

# All checks in order, cheapest groups first within the library's layering
all_checks = [
    # Evaluation (3)
    eval_examples_check,
    eval_right_inverse_check,
    eval_monotonicity_check,

    # Weak equivalences (4)
    gwbeq_predicts_check,
    gwbeq_waits_check,
    gwbeq_maybe_candidate_check,
    gwbeq_closure_check,

    # Bisimulation invariance (2)
    invariance_flagged_check,
    invariance_preserved_check,

    # Monoids and actions (3)
    monoid_laws_check,
    monoid_chains_check,
    monoid_action_check,

    # Laws (5)
    laws_applicative_check,
    laws_update_monad_check,
    laws_stream_check,
    laws_itree_check,
    laws_bistream_check,

    # Traversal behaviour (3)
    fusion_check_all,
    productivity_check,
    promptness_check,

    # Transposition (1)
    transpose_check,

    # Nonexamples (2)
    negative_forced_check,
    negative_bottoms_check,
]

# Quick checks for smoke testing
quick_checks = [c for c in all_checks if c.quick]


def get_checks_by_name(names: list) -> list:
    """Get checks by group or name (case-insensitive, partial match)."""
    result = []
    for name in names:
        name_lower = name.lower().strip()
        if not name_lower:
            continue
        for check in all_checks:
            if name_lower == check.group or name_lower in check.name.lower():
                if check not in result:
                    result.append(check)
    return result
