"""Check reports shared by every verification routine."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    arity: int | None = None
    dimension_left: int | None = None
    dimension_right: int | None = None
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        out = {
            "name": self.name,
            "arity": self.arity,
            "dimension_left": self.dimension_left,
            "dimension_right": self.dimension_right,
            "pass": self.passed,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, **kw) -> Check:
        c = Check(name, bool(passed), **kw)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.arity,
                                     c.dimension_left, c.dimension_right, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False, sort_keys=False)

    def format_text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            dims = ""
            if c.dimension_left is not None or c.dimension_right is not None:
                dims = f" dims {c.dimension_left}/{c.dimension_right}"
            ar = f" arity {c.arity}" if c.arity is not None else ""
            tail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}{ar}{dims}{tail}")
        return "\n".join(lines)
