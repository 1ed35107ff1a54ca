"""Shared dataclasses for checks, the runner and demos."""
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .errors import BudgetError


@dataclass
class CheckResult:
    """Result of a law check."""
    name: str
    group: str
    success: bool
    duration: float  # milliseconds
    message: str
    details: Optional[Dict[str, Any]] = None
    findings: List[Dict[str, Any]] = field(default_factory=list)
    suggestion: Optional[str] = None


@dataclass
class CheckContext:
    """Shared context passed to all checks."""
    seed: int = 0
    samples: int = 100
    depth: int = 8
    fuel: int = 2000
    timeout: int = 30000  # milliseconds


# Checks are synchronous; the runner moves them into worker processes.
CheckFunction = Callable[[CheckContext], CheckResult]


@dataclass
class Check:
    """Law check definition."""
    name: str
    group: str
    description: str
    run: CheckFunction
    quick: bool = False


@dataclass(frozen=True)
class DemoSpec:
    """A demo invocation: which demo, and the budgets and inputs to run it with."""
    name: str
    depth: int = 5
    fuel: int = 2000
    seed: int = 0
    env: int = 1
    s0: int = 0

    def __post_init__(self) -> None:
        if self.depth < 0 or self.fuel < 0:
            raise BudgetError(f"depth and fuel must be non-negative, got {self.depth}, {self.fuel}")

    def params(self) -> Dict[str, int]:
        out = asdict(self)
        out.pop("name")
        return out


@dataclass
class DemoResult:
    demo: str
    params: Dict[str, int]
    elements: List[Any]
    terminator: str
    expected: str
    fuel_used: int
    exit_code: int
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "demo": self.demo,
            "params": self.params,
            "elements": self.elements,
            "terminator": self.terminator,
            "fuel_used": self.fuel_used,
        }
        out.update(self.extras)
        return out
