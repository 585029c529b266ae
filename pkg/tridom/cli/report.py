# tridom/cli/report.py
from dataclasses import dataclass, field
from typing import Any

from tridom.oracles.certificates import DominationCertificate, Violation
from tridom.utils import constants

VERIFIED = "verified"
FAILED = "failed"
NOT_APPLICABLE = "n/a"


def format_value(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return ",".join(format_value(v) for v in items) or "-"
    return str(value).replace(" ", "_")


def status_of(result: DominationCertificate | Violation | None) -> str:
    """Map a checker result to a status: certificates and None mean success."""
    return FAILED if isinstance(result, Violation) else VERIFIED


@dataclass
class RunReport:
    """What one command did; `status` is always set from an independent checker call."""
    command: str
    summary: dict[str, Any] = field(default_factory=dict)
    result: dict[str, Any] = field(default_factory=dict)
    status: str = NOT_APPLICABLE
    detail: str = ""
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return self.status == FAILED

    def fields(self) -> dict[str, Any]:
        merged = {"command": self.command}
        merged.update(self.summary)
        merged.update(self.result)
        merged["certificate"] = self.status
        merged["elapsed_s"] = round(self.elapsed, 6)
        return merged

    def render(self) -> str:
        out = [f"{self.command}: {self.detail}" if self.detail else self.command]
        out += self.notes
        out += [f"{constants.REPORT_PREFIX}{key}={format_value(value)}" for key, value in self.fields().items()]
        return "\n".join(out) + "\n"
