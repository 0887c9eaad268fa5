"""Small pass/fail report containers used by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    check: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"check": self.check, "pass": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check, passed, detail=""):
        self.checks.append(CheckResult(check, bool(passed), detail))
        return self.checks[-1]

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return {
            "suite": self.suite,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def __str__(self):
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] suite {self.suite}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  {mark} {c.check}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        return "\n".join(lines)
