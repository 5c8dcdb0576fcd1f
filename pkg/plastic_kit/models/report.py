"""
Verification Report Models
"""
from dataclasses import dataclass, field
from typing import List, Optional

from plastic_kit.models.identity import CheckResult


@dataclass
class IdentityTally:
    """Per-identity counts; passes + failures + skipped = points_tested."""

    id: str
    title: str
    errata_watch: bool
    grid: str
    points_tested: int = 0
    passes: int = 0
    skipped: int = 0
    failed: int = 0
    failures: List[CheckResult] = field(default_factory=list)  # first few, in grid order

    def reconciles(self) -> bool:
        return self.passes + self.failed + self.skipped == self.points_tested


@dataclass
class CorrectionOutcome:
    label: str
    passes: bool
    points_failed: int


@dataclass
class ErrataFinding:
    """What the grid says about a statement under watch."""

    id: str
    anchor: str
    status: str  # 'confirmed' or 'counterexample'
    points_failed: int
    first_counterexample: Optional[CheckResult] = None
    corrections: List[CorrectionOutcome] = field(default_factory=list)
    accepted_correction: Optional[str] = None


@dataclass
class Report:
    version: str
    run: dict
    results: List[IdentityTally] = field(default_factory=list)
    errata_findings: List[ErrataFinding] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        watched = [t for t in self.results if t.errata_watch]
        checked = [t for t in self.results if not t.errata_watch]
        failures = sum(t.failed for t in checked)
        return {
            'identities': len(self.results),
            'points_tested': sum(t.points_tested for t in self.results),
            'passes': sum(t.passes for t in self.results),
            'failures': failures,
            'skipped': sum(t.skipped for t in self.results),
            'errata_failures': sum(t.failed for t in watched),
            'ok': failures == 0,
        }

    @property
    def exit_code(self) -> int:
        return 0 if self.summary['ok'] else 1

    def reconciles(self) -> bool:
        return all(t.reconciles() for t in self.results)
