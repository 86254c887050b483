"""Machine-readable verification reports."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field


def _token(value) -> str:
    s = str(value)
    return s.replace(" ", "") if s else "-"


@dataclass
class Check:
    name: str
    target: str
    expected: str
    observed: str
    passed: bool
    elapsed_ms: float = 0.0

    def line(self) -> str:
        flag = "pass" if self.passed else "fail"
        return (
            f"{_token(self.name)} {_token(self.expected)} {_token(self.observed)} "
            f"{flag} {self.elapsed_ms:.1f}"
        )


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, name, target, expected, observed, passed, elapsed_ms=0.0) -> Check:
        c = Check(name, target, str(expected), str(observed), bool(passed), float(elapsed_ms))
        self.checks.append(c)
        return c

    @contextmanager
    def timed(self, name, target, expected):
        """Run a block that sets ``slot['observed']`` and ``slot['passed']``."""
        slot = {"observed": "", "passed": False}
        t0 = time.perf_counter()
        try:
            yield slot
        finally:
            ms = (time.perf_counter() - t0) * 1000.0
            self.add(name, target, expected, slot["observed"], slot["passed"], ms)

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.target, c.expected, c.observed,
                                     c.passed, c.elapsed_ms))
        return self

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.name)

    def to_text(self) -> str:
        lines = [c.line() for c in self.sorted_checks()]
        lines.append("overall " + ("pass" if self.overall else "fail"))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "checks": [asdict(c) for c in self.sorted_checks()],
            "overall": "pass" if self.overall else "fail",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)
