"""Flat, timestamped records of verification outcomes."""

from datetime import datetime
from typing import Optional

from weierstrass.identities import IdentityReport
from weierstrass.verification import ScanResult

IDENTITY = "identity"
SCAN = "scan"


class ReportRecord:
    """One row of a verification report: an identity check or a property scan."""

    COLUMNS = ["kind", "name", "field", "status", "checks", "failures", "seed", "detail", "timestamp"]

    def __init__(self, kind: str, name: str, field: str, status: str, checks: int,
                 failures: int, seed: Optional[int] = None, detail: str = ""):
        self.kind = kind
        self.name = name
        self.field = field
        self.status = status
        self.checks = checks
        self.failures = failures
        self.seed = seed
        self.detail = detail
        self.timestamp = datetime.now()

    @classmethod
    def from_identity_report(cls, report: IdentityReport, field: str = "Z") -> "ReportRecord":
        """Exact reports live over Z; randomized ones pass their field label."""
        detail = report.counterexample or report.note
        return cls(IDENTITY, report.identity, field, report.status, report.trials or 1,
                   report.failures, report.seed, detail)

    @classmethod
    def from_scan_result(cls, result: ScanResult) -> "ReportRecord":
        status = "passed" if result.passed else "failed"
        return cls(SCAN, result.name, result.field, status, result.checks, result.failures,
                   None, "; ".join(result.examples))

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def __str__(self) -> str:
        return (
            f"{self.kind} {self.name} [{self.field}]: {self.status} "
            f"({self.checks} checks, {self.failures} failures) "
            f"[{self.timestamp.strftime('%Y-%m-%d %H:%M:%S')}]"
        )

    def __repr__(self) -> str:
        return (
            f"ReportRecord(kind={self.kind}, name={self.name}, field={self.field}, "
            f"status={self.status}, checks={self.checks}, failures={self.failures}, "
            f"seed={self.seed}, timestamp={self.timestamp})"
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "name": self.name,
            "field": self.field,
            "status": self.status,
            "checks": self.checks,
            "failures": self.failures,
            "seed": self.seed,
            "detail": self.detail,
            "timestamp": self.timestamp.isoformat(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReportRecord":
        """
        Rebuild a record from a dictionary, as read back from CSV.

        Missing seeds and details (NaN after a CSV round trip) become None and "".
        """
        seed = data.get("seed")
        detail = data.get("detail")
        record = cls(
            kind=str(data["kind"]),
            name=str(data["name"]),
            field=str(data["field"]),
            status=str(data["status"]),
            checks=int(data["checks"]),
            failures=int(data["failures"]),
            seed=None if seed is None or seed != seed else int(seed),
            detail="" if detail is None or detail != detail else str(detail),
        )
        if data.get("timestamp"):
            record.timestamp = datetime.fromisoformat(str(data["timestamp"]))
        return record
