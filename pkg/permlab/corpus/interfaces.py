"""Result types of the corpus drivers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class CorpusViolation:
    """One failed check: which check, on which matrix, and how."""

    check: str
    seed: int
    shape: Tuple[int, int]
    detail: str


@dataclass
class CorpusSummary:
    """Per-check counts and the violations found.

    ``counts`` maps a check name to ``(passed, total)``.
    """

    counts: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    violations: List[CorpusViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, check: str, passed: bool) -> None:
        good, total = self.counts.get(check, (0, 0))
        self.counts[check] = (good + int(passed), total + 1)

    def merge(self, other: CorpusSummary) -> None:
        for check, (good, total) in other.counts.items():
            mine = self.counts.get(check, (0, 0))
            self.counts[check] = (mine[0] + good, mine[1] + total)
        self.violations.extend(other.violations)

    def lines(self) -> List[str]:
        """``check passed/total`` lines in name order, then one line per violation."""
        out = [f"{check} {good}/{total}" for check, (good, total) in sorted(self.counts.items())]
        out.extend(
            f"FAIL {v.check} seed={v.seed} shape={v.shape[0]}x{v.shape[1]} {v.detail}"
            for v in self.violations
        )
        return out
