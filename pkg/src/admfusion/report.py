"""Verification reports with exact witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .config import LIMITS
from .cyclo import CycloNum
from .liealg import Weight


def witness(x: CycloNum) -> dict:
    re, im = x.to_complex(LIMITS.precision_bits)
    return {"exact": x.to_json(), "float": [re, im]}


def render(obj: Any) -> Any:
    """JSON-ready form of weights, labels and cyclotomic values."""
    if isinstance(obj, Weight):
        return list(obj.labels)
    if isinstance(obj, CycloNum):
        return witness(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (list, tuple)):
        return [render(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): render(v) for k, v in obj.items()}
    return obj


@dataclass
class Report:
    theorem: str
    header: dict = field(default_factory=dict)
    checks: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, name: str, ok: bool, **data) -> bool:
        self.checks.append({"check": name, "pass": bool(ok), **{k: render(v) for k, v in data.items()}})
        return ok

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    @property
    def failures(self) -> list[dict]:
        return [c for c in self.checks if not c["pass"]]

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, **self.header, "checks": self.checks, "pass": self.passed}
        if self.notes:
            out["notes"] = self.notes
        return out

    def summary(self) -> str:
        bad = len(self.failures)
        return f"{self.theorem}: {len(self.checks) - bad}/{len(self.checks)} checks passed"
