from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional


@dataclass
class CheckResult:
    """
    One named comparison inside a verification suite.
    """

    # ---- Identity ----
    check_id: str

    # ---- Outcome ----
    expected: Any
    actual: Any
    passed: bool

    # ---- Timing ----
    seconds: float = 0.0

    # ---- Failure detail ----
    error: Optional[str] = None

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        out = {
            "id": self.check_id,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "pass": self.passed,
        }
        if self.error:
            out["error"] = self.error
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class VerificationReport:
    """
    All checks of one suite, in the order they ran.
    """

    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def seconds(self) -> float:
        return sum(c.seconds for c in self.checks)

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": [c.to_dict(timings) for c in self.checks],
        }


def _plain(value: Any) -> Any:
    """JSON-friendly copy with a canonical order for sets and mappings."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (set, frozenset)):
        return sorted((_plain(v) for v in value), key=repr)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


@dataclass
class CheckSpec:
    """
    A check before it runs: the expected value and how to compute the actual one.
    """

    check_id: str
    expected: Any
    compute: Callable[[], Any]


@dataclass
class SuiteContext:
    """
    Knobs shared by every suite of one run, plus a cache for objects
    that several suites need (the O-graded models are the costly ones).
    """

    # ---- Parallelism ----
    threads: int = 1
    chunk_size: int = 16
    progress: bool = False

    # ---- Models ----
    theta_index: int = 0

    # ---- Octonions ----
    composition_samples: int = 1000
    seed: int = 0

    cache: Dict[str, Any] = field(default_factory=dict)

    def cached(self, key: str, build: Callable[[], Any]) -> Any:
        """A failed build is cached too, so dependent checks fail fast with the same error."""
        if key not in self.cache:
            try:
                self.cache[key] = build()
            except Exception as e:
                self.cache[key] = e
        value = self.cache[key]
        if isinstance(value, Exception):
            raise value
        return value
