"""Structured verdicts returned by every theorem check."""

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np


@dataclass
class CheckReport:
    """Outcome of one mechanical check.

    ``witness`` holds the first counterexample on failure (or an example on
    success where that is informative).  ``applicable=False`` marks a check
    whose hypotheses the input does not meet; such a report never fails.
    """

    check: str
    passed: bool
    witness: Optional[Any] = None
    details: dict = field(default_factory=dict)
    applicable: bool = True
    note: str = ""

    def __bool__(self):
        return self.passed

    @classmethod
    def not_applicable(cls, check, note):
        return cls(check, True, applicable=False, note=note)

    def to_dict(self):
        out = {"check": self.check, "passed": self.passed, "applicable": self.applicable}
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.details:
            out["details"] = jsonable(self.details)
        return out

    def summary(self):
        if not self.applicable:
            return f"{self.check}: not applicable ({self.note})"
        verdict = "pass" if self.passed else "FAIL"
        line = f"{self.check}: {verdict}"
        if self.note:
            line += f" ({self.note})"
        if not self.passed and self.witness is not None:
            line += f"; witness {jsonable(self.witness)}"
        return line


def jsonable(obj):
    """Recursively convert numpy scalars/arrays, tuples, sets and enums to JSON types."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if hasattr(obj, "value") and hasattr(obj, "name"):
        return obj.value
    if isinstance(obj, CheckReport):
        return obj.to_dict()
    return obj
