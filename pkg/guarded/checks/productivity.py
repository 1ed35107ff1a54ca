"""Productivity: fuel per observed prefix stays under a frozen linear bound."""
from typing import Any, Callable, Tuple

from ..data import pstream_of, repeat_forever, tabulate
from ..demos import UPDATE, transducer_step
from ..effects import IDENTITY, READER, Identity, Writer, ask, writer
from ..monoids import PSTREAM
from ..traversals import (
    LinearBound,
    identity_algebra,
    isequence_stream,
    measure_productivity,
    reader_algebra,
    update_algebra,
    writer_algebra,
)
from ..types import Check, CheckContext, CheckResult
from .utilities import from_reports, timed

PREFIXES = (1, 2, 4, 8, 16, 32)
# Measured at one force per element; slope and intercept leave headroom.
BOUND = LinearBound(slope=2, intercept=4)

Target = Tuple[str, Callable[[], Any], Callable[[Any], Any]]

TARGETS: Tuple[Target, ...] = (
    ("Reader", lambda: isequence_stream(repeat_forever(ask()), READER), reader_algebra(1)),
    (
        "Writer[PStream]",
        lambda: isequence_stream(tabulate(lambda n: Writer(n, pstream_of(n))), writer(PSTREAM)),
        writer_algebra,
    ),
    ("Update[PStream]", lambda: isequence_stream(repeat_forever(transducer_step()), UPDATE), update_algebra(0)),
    ("Identity", lambda: isequence_stream(tabulate(Identity), IDENTITY), identity_algebra),
)


def _productivity_check(ctx: CheckContext) -> CheckResult:
    """Every algebra image yields k elements within the bound."""
    reports = [
        measure_productivity(build, alg, PREFIXES, ctx.fuel, BOUND, subject=name) for name, build, alg in TARGETS
    ]
    return from_reports(
        "productivity",
        "productivity",
        reports,
        extra={r.subject: r.details["fuel_used"] for r in reports},
        suggestion="A traversal forces more than a constant number of layers per element",
    )


productivity_check = Check(
    name="productivity",
    group="productivity",
    description="Reader, Writer, Update and Identity traversals are linearly productive",
    run=timed(_productivity_check),
    quick=True,
)
