from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class Verdict:
    """Outcome of a finite check: truthy iff the property held on every probe."""
    holds: bool
    counterexample: Optional[Tuple] = None
    detail: str = ""

    @classmethod
    def ok(cls, detail: str = "") -> 'Verdict':
        return cls(True, None, detail)

    @classmethod
    def fails(cls, counterexample: Tuple, detail: str) -> 'Verdict':
        return cls(False, counterexample, detail)

    def __bool__(self):
        return self.holds

    def __str__(self):
        if self.holds:
            return f"holds{': ' + self.detail if self.detail else ''}"
        return f"fails: {self.detail}"
