import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from satvec.printing import print_table
from satvec.units import percent, seconds_to_human_readable

CORRECT = "correct"
INCORRECT = "incorrect"
TIMEOUT = "timeout"
UNREPRESENTABLE = "unrepresentable"
OUTCOMES = (CORRECT, INCORRECT, TIMEOUT, UNREPRESENTABLE)


@dataclass
class ItemOutcome:
    index: int
    """Position of the item in the corpus"""
    outcome: str
    """One of correct, incorrect, timeout and unrepresentable"""
    seconds: Dict[str, float] = field(default_factory=dict)
    """Wall-clock seconds per phase"""
    message: Optional[str] = None


@dataclass
class ExperimentReport:
    """Outcome of every corpus item of a round-trip experiment"""

    items: List[ItemOutcome]
    t: int
    budget_seconds: Optional[float]
    verify: bool
    digest: str

    @property
    def total(self) -> int:
        return len(self.items)

    @property
    def counts(self) -> Dict[str, int]:
        counter = Counter(item.outcome for item in self.items)
        return {outcome: counter.get(outcome, 0) for outcome in OUTCOMES}

    @property
    def rates(self) -> Dict[str, float]:
        """Percentage of items per outcome, to one decimal place"""
        return {outcome: percent(count, self.total) for outcome, count in self.counts.items()}

    @property
    def seconds(self) -> Dict[str, float]:
        """Total wall-clock seconds per phase"""
        totals: Dict[str, float] = {}
        for item in self.items:
            for phase, seconds in item.seconds.items():
                totals[phase] = totals.get(phase, 0.0) + seconds
        return totals

    def failures(self) -> List[ItemOutcome]:
        return [item for item in self.items if item.outcome != CORRECT]

    def to_json(self) -> str:
        summary = {
            "t": self.t,
            "budget_seconds": self.budget_seconds,
            "verify": self.verify,
            "digest": self.digest,
            "total": self.total,
            "counts": self.counts,
            "rates": self.rates,
            "seconds": self.seconds,
            "items": [asdict(item) for item in sorted(self.items, key=lambda item: item.index)],
        }
        return json.dumps(summary, indent=2)

    def display(self) -> None:
        budget = "none" if self.budget_seconds is None else seconds_to_human_readable(self.budget_seconds)
        print(f"Round trip of {self.total} items, t={self.t}, budget {budget}, verification {'on' if self.verify else 'off'}")
        counts = self.counts
        rates = self.rates
        print_table(
            [[outcome, counts[outcome], f"{rates[outcome]:.1f}%"] for outcome in OUTCOMES],
            headers=["outcome", "items", "rate"],
        )
        seconds = self.seconds
        if seconds:
            print_table(
                [[phase, seconds_to_human_readable(total)] for phase, total in sorted(seconds.items())],
                headers=["phase", "time"],
            )
