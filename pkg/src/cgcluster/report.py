"""Machine-readable run reports."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

SCHEMA_VERSION = 1


def jsonable(x: Any):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    if isinstance(x, Path):
        return str(x)
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


@dataclass
class RunReport:
    command: str
    parameters: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    findings: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    artifacts: list = field(default_factory=list)

    def check(self, name: str, passed: bool, **detail) -> bool:
        self.checks.append({"name": name, "passed": bool(passed), **({"detail": jsonable(detail)} if detail else {})})
        return bool(passed)

    @contextmanager
    def timed(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - t0, 4)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self, *, timings: bool = True) -> dict:
        d = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "parameters": jsonable(self.parameters),
            "passed": self.passed,
            "checks": self.checks,
            "findings": jsonable(self.findings),
            "artifacts": [str(a) for a in self.artifacts],
        }
        if timings:
            d["timings"] = self.timings
        return d

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(**kw), indent=2, sort_keys=False)

    def write(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps() + "\n")
        return path
