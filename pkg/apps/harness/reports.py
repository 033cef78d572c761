"""
Verification report records and the JSON-lines writer
"""

import json
import sys
from pathlib import Path
from typing import IO, Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

from libs.core.config import get_settings


class CheckOutcome(BaseModel):
    name: str
    expected: Any = None
    observed: Any = None
    passed: bool


class InstanceReport(BaseModel):
    """One generated instance with every check run on it.

    ``instance`` holds the generator request(s) and the graph6 text of each
    graph so a failure can be replayed on its own.
    """
    suite: str
    index: int
    instance: Dict[str, Any]
    checks: List[CheckOutcome] = Field(default_factory=list)
    error: Optional[str] = None
    budget_exceeded: bool = False
    elapsed: float = 0.0

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)


class VerifyReport(BaseModel):
    """Summary line closing a suite run"""
    suite: str
    seed: int
    trials: int
    max_n: int
    instances: int = 0
    failed: int = 0
    budget_exceeded: int = 0
    failures: List[InstanceReport] = Field(default_factory=list)
    # Constructions that fell back to a search during the run
    fallbacks: Dict[str, int] = Field(default_factory=dict)
    elapsed: float = 0.0

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return self.failed == 0


class ReportWriter:
    """Writes one JSON object per line to the stream and, if configured, to report_dir"""

    def __init__(self, name: str, fmt: str = "json", stream: Optional[IO[str]] = None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self.file: Optional[IO[str]] = None
        report_dir = get_settings().report_dir
        if report_dir:
            path = Path(report_dir)
            path.mkdir(parents=True, exist_ok=True)
            self.file = (path / f"{name}.jsonl").open("w", encoding="utf-8")

    def write(self, record: Dict[str, Any], text: Optional[str] = None) -> None:
        line = json.dumps(record, sort_keys=True)
        if self.fmt == "text" and text is not None:
            self.stream.write(text + "\n")
        else:
            self.stream.write(line + "\n")
        self.stream.flush()
        if self.file is not None:
            self.file.write(line + "\n")
            self.file.flush()

    def close(self) -> None:
        if self.file is not None:
            self.file.close()
            self.file = None


def instance_text(report: InstanceReport) -> str:
    status = "PASS" if report.passed else ("BUDGET" if report.budget_exceeded else "FAIL")
    parts = [f"[{status}] {report.suite} #{report.index}"]
    for check in report.checks:
        if not check.passed:
            parts.append(f"  {check.name}: expected {check.expected!r}, observed {check.observed!r}")
    if report.error:
        parts.append(f"  error: {report.error}")
    return "\n".join(parts)


def summary_text(report: VerifyReport) -> str:
    return (
        f"{report.suite}: {report.instances - report.failed}/{report.instances} passed, "
        f"{report.budget_exceeded} over budget, {report.elapsed:.1f}s"
    )
