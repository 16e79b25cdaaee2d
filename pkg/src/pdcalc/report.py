"""Check reports shared by the checking modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class ProbeResult:
    probe: str
    verdict: str
    witness: Any = None
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        out = {"probe": self.probe, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.detail:
            out["detail"] = jsonable(self.detail)
        return out


@dataclass
class CheckReport:
    check: str
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    approximate: bool = False

    def add(self, probe, verdict, witness=None, **detail) -> ProbeResult:
        r = ProbeResult(str(probe), verdict, witness, detail)
        self.results.append(r)
        return r

    @property
    def verdict(self) -> str:
        verdicts = [r.verdict for r in self.results]
        if FAIL in verdicts:
            return FAIL
        if INCONCLUSIVE in verdicts:
            return INCONCLUSIVE
        return PASS

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def first_failure(self) -> Optional[ProbeResult]:
        return next((r for r in self.results if r.verdict == FAIL), None)

    def result(self, probe) -> Optional[ProbeResult]:
        return next((r for r in self.results if r.probe == str(probe)), None)

    def __bool__(self):
        return self.passed

    def to_dict(self):
        verdict = self.verdict
        if verdict == PASS and self.approximate:
            verdict = "pass (approximate)"
        out = {"check": self.check, "verdict": verdict,
               "probes": [r.to_dict() for r in self.results]}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def jsonable(value):
    """Deterministic JSON-friendly rendering of nested witness data."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=repr)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, "images"):
        return {"map": jsonable(value.images)}
    return repr(value)
