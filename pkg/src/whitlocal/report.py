"""Structured pass/fail reports shared by the verification suites.

A SuiteReport is a named list of CheckResults.  A check carries a witness
string exactly when it did not pass, and a millisecond timing that is
excluded from serialized output unless explicitly requested, so that
repeated runs of the same configuration emit identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

PASS = "pass"
FAIL = "fail"
ERROR = "error"


@dataclass
class CheckResult:
    id: str
    description: str
    status: str
    witness: str | None = None
    millis: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def run_check(check_id: str, description: str, fn: Callable[[], tuple[bool, str | None]]) -> CheckResult:
    """Run one check body and wrap the outcome.

    The body returns (ok, witness); raising is recorded as an error with
    the exception text as witness.
    """
    t0 = time.perf_counter()
    try:
        ok, witness = fn()
        status = PASS if ok else FAIL
        if ok:
            witness = None
        elif witness is None:
            witness = "check returned false"
    except Exception as exc:  # noqa: BLE001 - report, do not crash the suite
        status = ERROR
        witness = f"{type(exc).__name__}: {exc}"
    millis = int((time.perf_counter() - t0) * 1000)
    return CheckResult(check_id, description, status, witness, millis)


def merge_reports(name: str, reports: Iterable[SuiteReport]) -> SuiteReport:
    """Combine reports into one, prefixing check ids by their suite.

    Checks are sorted by the prefixed id so the merged report does not
    depend on completion order when suites run in parallel.
    """
    merged = SuiteReport(name)
    for rep in reports:
        for c in rep.checks:
            merged.add(
                CheckResult(f"{rep.suite}/{c.id}", c.description, c.status, c.witness, c.millis)
            )
    merged.checks.sort(key=lambda c: c.id)
    return merged


def report_to_json(report: SuiteReport, include_timings: bool = False) -> str:
    checks = []
    for c in report.checks:
        entry: dict = {"id": c.id, "description": c.description, "status": c.status}
        if c.status != PASS:
            entry["witness"] = c.witness
        if include_timings:
            entry["millis"] = c.millis
        checks.append(entry)
    payload = {"suite": report.suite, "status": report.status, "checks": checks}
    return json.dumps(payload, indent=2)


CSV_COLUMNS = ("suite", "check_id", "description", "status", "witness")


def report_to_csv(report: SuiteReport, include_timings: bool = False) -> str:
    buf = io.StringIO()
    columns: Sequence[str] = CSV_COLUMNS + (("millis",) if include_timings else ())
    writer = csv.writer(buf)
    writer.writerow(columns)
    for c in report.checks:
        row = [report.suite, c.id, c.description, c.status, c.witness or ""]
        if include_timings:
            row.append(c.millis)
        writer.writerow(row)
    return buf.getvalue()


def report_to_text(report: SuiteReport, include_timings: bool = False) -> str:
    lines = [f"suite {report.suite}: {report.status}"]
    for c in report.checks:
        mark = "ok " if c.passed else ("ERR" if c.status == ERROR else "FAIL")
        timing = f"  [{c.millis} ms]" if include_timings else ""
        lines.append(f"  {mark} {c.id}  {c.description}{timing}")
        if not c.passed and c.witness:
            lines.append(f"      witness: {c.witness}")
    npass = sum(1 for c in report.checks if c.passed)
    lines.append(f"  {npass}/{len(report.checks)} checks passed")
    return "\n".join(lines) + "\n"
