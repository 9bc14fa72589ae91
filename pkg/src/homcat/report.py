"""Small result record shared by the exhaustive checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    passed: bool
    checked: int = 0
    witness: dict | None = None
    data: Any = field(default=None, repr=False, compare=False)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"passed": self.passed, "checked": self.checked, "witness": self.witness}
