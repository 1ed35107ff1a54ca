"""Sequential check runner."""
import asyncio
import multiprocessing
import time
from multiprocessing.connection import Connection
from typing import List

from .reporter import Reporter
from .types import Check, CheckContext, CheckResult

_POLL_SECONDS = 0.01


def _timed_out(check: Check, timeout_ms: int) -> CheckResult:
    return CheckResult(
        name=check.name,
        group=check.group,
        success=False,
        duration=timeout_ms,
        message=f"Check timed out after {timeout_ms}ms",
        suggestion="Lower GUARDED_SAMPLES or raise GUARDED_CHECK_TIMEOUT"
    )


def _run_in_worker(check: Check, context: CheckContext, conn: Connection) -> None:
    try:
        conn.send(("ok", check.run(context)))
    except Exception as e:
        conn.send(("error", str(e)))
    finally:
        conn.close()


async def _run_in_process(check: Check, context: CheckContext, timeout_ms: int) -> CheckResult:
    """Run a check in a forked worker that is killed once the timeout passes."""
    mp = multiprocessing.get_context("fork")
    receiver, sender = mp.Pipe(duplex=False)
    worker = mp.Process(target=_run_in_worker, args=(check, context, sender), daemon=True)
    deadline = time.monotonic() + timeout_ms / 1000.0

    worker.start()
    sender.close()
    try:
        while not receiver.poll():
            if not worker.is_alive() and not receiver.poll():
                raise RuntimeError(f"worker exited with code {worker.exitcode}")
            if time.monotonic() >= deadline:
                return _timed_out(check, timeout_ms)
            await asyncio.sleep(_POLL_SECONDS)
        status, payload = receiver.recv()
    finally:
        receiver.close()
        if worker.is_alive():
            worker.terminate()
        worker.join()

    if status == "error":
        raise RuntimeError(payload)
    return payload


async def run_check_with_timeout(
    check: Check,
    context: CheckContext,
    timeout_ms: int
) -> CheckResult:
    """Run a single check with timeout protection.

    Where the platform can fork, the check runs in its own process and is
    terminated at the deadline. Elsewhere it runs on a worker thread, which
    reports the timeout but cannot be stopped.

    Args:
        check: The check to run
        context: Shared check context
        timeout_ms: Timeout in milliseconds

    Returns:
        CheckResult from the check or timeout error
    """
    if "fork" in multiprocessing.get_all_start_methods():
        return await _run_in_process(check, context, timeout_ms)
    try:
        return await asyncio.wait_for(
            asyncio.to_thread(check.run, context),
            timeout=timeout_ms / 1000.0
        )
    except asyncio.TimeoutError:
        return _timed_out(check, timeout_ms)


async def run_checks(
    checks: List[Check],
    context: CheckContext,
    reporter: Reporter
) -> List[CheckResult]:
    """Run checks one after another.

    Args:
        checks: List of checks to run
        context: Shared check context
        reporter: Reporter for output

    Returns:
        List of CheckResults from all checks
    """
    results: List[CheckResult] = []

    reporter.start()

    for check in checks:
        reporter.on_check_start(check)

        start_time = time.perf_counter()
        try:
            result = await run_check_with_timeout(check, context, context.timeout)
            if result.duration == 0:
                result.duration = (time.perf_counter() - start_time) * 1000
        except Exception as e:
            result = CheckResult(
                name=check.name,
                group=check.group,
                success=False,
                duration=(time.perf_counter() - start_time) * 1000,
                message=f"Check failed with exception: {e}",
                suggestion="Run with --verbose for the findings"
            )

        results.append(result)
        reporter.on_check_complete(result)

    reporter.finish(results)
    return results
