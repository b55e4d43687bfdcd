"""Deterministic verification reports, emitted as text or JSON."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | skip
    witness: str = ""
    elapsed_ms: int = 0


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: str = "", elapsed_ms: int = 0):
        self.checks.append(
            CheckResult(name, "pass" if ok else "fail", witness, elapsed_ms)
        )

    def skip(self, name: str, witness: str = ""):
        self.checks.append(CheckResult(name, "skip", witness))

    def extend(self, other: "SuiteReport"):
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json(self, with_timing: bool = False) -> str:
        body = {
            "suite": self.suite,
            "counts": self.counts(),
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    **({"witness": c.witness} if c.witness else {}),
                    **({"elapsed_ms": c.elapsed_ms} if with_timing else {}),
                }
                for c in self.checks
            ],
        }
        return json.dumps(body, indent=2, sort_keys=True)

    def to_text(self, with_timing: bool = True) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            mark = {"pass": "ok  ", "fail": "FAIL", "skip": "skip"}[c.status]
            suffix = f"  [{c.witness}]" if c.witness else ""
            timing = f"  ({c.elapsed_ms} ms)" if with_timing and c.elapsed_ms else ""
            lines.append(f"  [{mark}] {c.name}{suffix}{timing}")
        counts = self.counts()
        lines.append(
            f"  total: {counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped"
        )
        return "\n".join(lines)


class timed:
    """Context manager collecting integer milliseconds."""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int((time.perf_counter() - self.start) * 1000)
        return False
