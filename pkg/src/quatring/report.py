"""Verification reports: one pass/fail record per certified statement."""

import time
from dataclasses import dataclass, field

FIELDS = ("check_id", "theorem_ref", "status", "details", "wall_time_ms")


@dataclass
class VerificationReport:
    check_id: str
    theorem_ref: str
    status: str
    details: dict = field(default_factory=dict)
    wall_time_ms: int = 0

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {k: getattr(self, k) for k in FIELDS}

    def summary(self):
        return f"[{self.status.upper()}] {self.check_id} ({self.theorem_ref})"


class ReportBuilder:
    """Collects named sub-assertions; the report passes iff all of them do."""

    def __init__(self, check_id, theorem_ref):
        self.check_id = check_id
        self.theorem_ref = theorem_ref
        self.details = {"checks": {}}
        self.failures = []
        self._t0 = time.perf_counter()

    def record(self, key, value):
        self.details[key] = value

    def require(self, name, ok, **counterexample):
        ok = bool(ok)
        self.details["checks"][name] = ok
        if not ok:
            self.failures.append({"check": name, **counterexample})
        return ok

    def merge(self, prefix, report):
        """Fold a sub-report in as a single named check."""
        self.require(prefix, report.passed)
        self.details[prefix] = report.details

    def finish(self):
        if self.failures:
            self.details["failures"] = self.failures
        ms = int(round((time.perf_counter() - self._t0) * 1000))
        status = "fail" if self.failures else "pass"
        return VerificationReport(self.check_id, self.theorem_ref, status,
                                  self.details, ms)
