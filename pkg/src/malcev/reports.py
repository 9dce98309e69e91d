"""Pass/fail reporting for verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    where: str
    detail: str = ""


@dataclass
class VerificationReport:
    title: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, where: str, detail: str = "") -> None:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(where, detail))

    def merge(self, other: "VerificationReport") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.title}: {status} ({self.checks} checks"
        if self.failures:
            line += f", {len(self.failures)} failures"
        return line + ")"

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": self.checks,
            "failures": [{"where": f.where, "detail": f.detail} for f in self.failures],
        }
