"""Output formatting for suites and demos."""
import json
import sys
from typing import List, TextIO

from .types import Check, CheckResult, DemoResult


class Reporter:
    """Handles check output formatting."""

    # ANSI color codes
    GREEN = "\033[32m"
    RED = "\033[31m"
    YELLOW = "\033[33m"
    RESET = "\033[0m"
    BOLD = "\033[1m"

    def __init__(self, verbose: bool = False, json_output: bool = False, stream: TextIO = None):
        """Initialize reporter.

        Args:
            verbose: Show findings for each check
            json_output: One JSON object per line instead of text
            stream: Where to write; defaults to stdout
        """
        self.verbose = verbose
        self.json_output = json_output
        self.stream = stream or sys.stdout
        # Check if terminal supports colors
        self.use_colors = self.stream.isatty() and not json_output

    def _color(self, text: str, color: str) -> str:
        """Apply color to text if colors are enabled."""
        if self.use_colors:
            return f"{color}{text}{self.RESET}"
        return text

    def _print(self, text: str = "") -> None:
        print(text, file=self.stream)

    def _json_line(self, payload: dict) -> None:
        self._print(json.dumps(payload, sort_keys=True, ensure_ascii=False))

    def start(self):
        """Called at the start of check execution."""
        if not self.json_output:
            self._print("\nGuarded law suite\n")
            self._print("=" * 50)

    def on_check_start(self, check: Check):
        """Called when a check starts."""
        if not self.json_output and self.verbose:
            self._print(f"\n▶ {check.name}: {check.description}")

    def on_check_complete(self, result: CheckResult):
        """Called when a check completes.

        JSON lines leave out durations so identical seeds give identical output.
        """
        if self.json_output:
            self._json_line({
                "name": result.name,
                "group": result.group,
                "success": result.success,
                "message": result.message,
                "details": result.details,
                "findings": result.findings,
            })
            return

        if result.success:
            status = self._color("✓", self.GREEN)
        else:
            status = self._color("✗", self.RED)

        self._print(f"  {status} {result.name}: {result.message} ({result.duration:.0f}ms)")

        if self.verbose and result.details:
            self._print(f"    Details: {json.dumps(result.details, sort_keys=True, ensure_ascii=False)}")

        if self.verbose:
            for finding in result.findings[:5]:
                self._print(f"    - {json.dumps(finding, sort_keys=True, ensure_ascii=False)}")

        if not result.success and result.suggestion:
            self._print(f"    💡 {result.suggestion}")

    def finish(self, results: List[CheckResult]):
        """Called when all checks are complete."""
        if self.json_output:
            return

        passed = sum(1 for r in results if r.success)
        failed = len(results) - passed
        total = len(results)

        self._print("\n" + "=" * 50)

        if failed > 0:
            status = self._color(f"Results: {passed}/{total} passed ({failed} failed)", self.YELLOW)
        else:
            status = self._color(f"Results: {passed}/{total} passed ✓", self.GREEN)

        self._print(f"\n{status}")

    def demo(self, result: DemoResult):
        """Render one demo run."""
        if self.json_output:
            self._json_line(result.to_json())
            return

        elements = ", ".join(json.dumps(e, ensure_ascii=False) for e in result.elements)
        ok = result.exit_code != 1
        status = self._color("✓" if ok else "✗", self.GREEN if ok else self.RED)
        self._print(f"{status} {result.demo}: [{elements}] {result.terminator} (fuel used {result.fuel_used})")
        for key, value in sorted(result.extras.items()):
            self._print(f"    {key}: {json.dumps(value, ensure_ascii=False)}")
        if not ok:
            self._print(f"    expected {result.expected}, got {result.terminator}")
