"""Structured pass/fail reporting for the identity verification suites.

A VerifyReport is an ordered list of Check records.  Suites append checks in a
deterministic order, so two runs over the same parameters serialize to the
same JSON bytes regardless of how the work was scheduled.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    identity: str
    params: dict
    status: str  # "pass" or "fail"
    witness: str = ""

    def to_jsonable(self):
        out = {
            "identity": self.identity,
            "params": {k: _plain(v) for k, v in sorted(self.params.items())},
            "status": self.status,
        }
        if self.witness:
            out["witness"] = self.witness
        return out


def _plain(v):
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


@dataclass
class VerifyReport:
    name: str
    checks: list = field(default_factory=list)

    def record(self, identity, params, ok, witness="") -> bool:
        """Append one check; returns ok so callers can chain on it."""
        self.checks.append(
            Check(identity, dict(params), "pass" if ok else "fail", "" if ok else str(witness))
        )
        return bool(ok)

    def extend(self, other: "VerifyReport"):
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def to_jsonable(self):
        return {
            "suite": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "checks": [c.to_jsonable() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.passed} passed, {self.failed} failed)"

    def lines(self):
        out = [self.summary()]
        for c in self.failures():
            params = ", ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            line = f"  FAIL {c.identity} [{params}]"
            if c.witness:
                line += f" :: {c.witness}"
            out.append(line)
        return out
