"""Transposition of an infinite matrix through the Reader traversal."""
from typing import Any, Dict

from ..core import EXHAUSTED, Value
from ..data import tabulate
from ..effects import Reader
from ..evaluation import Finding, ObsBudget, PairOf, Report, Seq, StreamOf, Terminator, leval, nth
from ..generators import index_pairs
from ..traversals import transpose_infinite
from ..types import Check, CheckContext, CheckResult
from .utilities import from_reports, timed

PAIRS = 20
LIMIT = 50


def matrix() -> Any:
    """Row ``i`` maps column ``j`` to ``(i, j)``."""
    return tabulate(lambda i: Reader(lambda j, i=i: (i, j)))


def _entry(s: Any, i: int, fuel: int) -> Any:
    found = nth(s, i, fuel)
    return found.value if isinstance(found, Value) else EXHAUSTED


def _transpose_check(ctx: CheckContext) -> CheckResult:
    """Pointwise against index arithmetic, then transposed back."""
    fuel = max(ctx.fuel, LIMIT + 1)
    columns = transpose_infinite(matrix())
    back = transpose_infinite(
        tabulate(lambda j: Reader(lambda i, j=j: _entry(columns.run(j), i, fuel)))
    )
    pairs = index_pairs(ctx.seed, PAIRS, LIMIT)
    pointwise = Report("transpose", "column j, row i", len(pairs))
    round_trip = Report("double-transpose", "row i, column j", len(pairs))
    for index, (i, j) in enumerate(pairs):
        found = nth(columns.run(j), i, fuel)
        if found != Value((i, j)):
            pointwise.findings.append(Finding("transpose", index, None, (i, j), found))
        again = nth(back.run(i), j, fuel)
        if again != Value((i, j)):
            round_trip.findings.append(Finding("double-transpose", index, None, (i, j), again))

    example = leval(columns.run(2), StreamOf(PairOf()), ObsBudget(3, 10)).result
    expected = Seq(((0, 2), (1, 2), (2, 2)), Terminator.TRUNCATED)
    if example != expected:
        pointwise.findings.append(Finding("transpose", -1, ObsBudget(3, 10), expected, example))
    extra: Dict[str, Any] = {"pairs": pairs, "column 2 prefix": example}
    return from_reports("transpose", "transpose", [pointwise, round_trip], extra=extra)


transpose_check = Check(
    name="transpose",
    group="transpose",
    description="Infinite matrix transposition, pointwise and round trip",
    run=timed(_transpose_check),
    quick=True,
)
