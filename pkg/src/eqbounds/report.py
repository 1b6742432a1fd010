"""Machine-readable run reports.

The JSON serialization is deterministic: fixed key order, exact
rationals as "p/q" strings, witness paths sorted, error tallies sorted
by key.  Wall-clock time and thread count are deliberately not part of
the JSON (they never affect statistics), so identical configurations
produce byte-identical reports; the text rendering carries the timing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

CONFIRMED = "confirmed-at-scale"
COUNTEREXAMPLE = "counterexample"
ERROR = "error"

# error tags that block confirmation (as opposed to informative warnings)
FATAL_TAGS = frozenset(
    {"NotZeroDimensionalError", "DegenerateBackSubstitutionError", "solver_failure"}
)


@dataclass
class Report:
    command: str
    config: dict
    trials_attempted: int
    trials_completed: int
    statistic_name: str
    statistic_value: str
    bound: str
    verdict: str
    witnesses: tuple[str, ...] = ()
    error_tallies: dict[str, int] = field(default_factory=dict)
    extra: dict = field(default_factory=dict)
    wall_clock_seconds: float = 0.0

    @property
    def exit_code(self) -> int:
        if self.verdict == COUNTEREXAMPLE:
            return 2
        if self.verdict == ERROR:
            return 1
        return 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "config": self.config,
            "trials": {
                "attempted": self.trials_attempted,
                "completed": self.trials_completed,
            },
            "statistic": {"name": self.statistic_name, "value": self.statistic_value},
            "bound": self.bound,
            "verdict": self.verdict,
            "witnesses": sorted(self.witnesses),
            "errors": {k: self.error_tallies[k] for k in sorted(self.error_tallies)},
            "extra": {k: self.extra[k] for k in sorted(self.extra)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.verdict}"]
        for key, value in self.config.items():
            lines.append(f"  {key}: {value}")
        lines.append(f"  trials: {self.trials_completed}/{self.trials_attempted}")
        lines.append(f"  {self.statistic_name}: {self.statistic_value} (bound {self.bound})")
        for key in sorted(self.extra):
            lines.append(f"  {key}: {self.extra[key]}")
        if self.error_tallies:
            tallies = ", ".join(f"{k}={v}" for k, v in sorted(self.error_tallies.items()))
            lines.append(f"  errors: {tallies}")
        if self.witnesses:
            lines.append("  witnesses:")
            lines.extend(f"    {w}" for w in sorted(self.witnesses))
        lines.append(f"  wall clock: {self.wall_clock_seconds:.2f}s")
        return "\n".join(lines)


def decide_verdict(witnesses: tuple[str, ...], error_tallies: dict[str, int]) -> str:
    """counterexample iff witnesses exist; error when a fatal tag was tallied."""
    if witnesses:
        return COUNTEREXAMPLE
    if any(tag in FATAL_TAGS for tag in error_tallies):
        return ERROR
    return CONFIRMED
