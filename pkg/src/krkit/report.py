"""Small containers shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List

MAX_COUNTEREXAMPLES = 10


@dataclass
class Outcome:
    """Count of checked instances for one identity, plus a few failures."""
    name: str
    checked: int = 0
    failed: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)

    def record(self, ok: bool, payload=None) -> bool:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(payload() if callable(payload) else (payload or {}))
        return ok

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
        }


class OutcomeSet(dict):
    """Ordered name -> Outcome map."""

    def get_or_add(self, name: str) -> Outcome:
        if name not in self:
            self[name] = Outcome(name)
        return self[name]

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.values())

    def as_list(self) -> List[Dict[str, Any]]:
        return [o.as_dict() for o in self.values()]
