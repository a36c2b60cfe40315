"""Law reports returned by the randomized invariant suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class LawReport:
    """Per-law case counts plus the counterexamples found.

    ``counterexamples`` keeps at most ``keep`` entries per law so that a badly
    broken instance does not produce megabytes of output.
    """

    name: str
    cases: dict[str, int] = field(default_factory=dict)
    failures: dict[str, int] = field(default_factory=dict)
    counterexamples: dict[str, list[dict[str, Any]]] = field(default_factory=dict)
    keep: int = 3

    def law(self, law: str) -> None:
        self.cases.setdefault(law, 0)
        self.failures.setdefault(law, 0)

    def record(self, law: str, ok: bool, **detail: Any) -> bool:
        self.law(law)
        self.cases[law] += 1
        if not ok:
            self.failures[law] += 1
            bucket = self.counterexamples.setdefault(law, [])
            if len(bucket) < self.keep:
                bucket.append({k: _plain(v) for k, v in detail.items()})
        return ok

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def failed_laws(self) -> list[str]:
        return [law for law, n in self.failures.items() if n]

    def merge(self, other: LawReport) -> LawReport:
        for law in other.cases:
            self.law(law)
            self.cases[law] += other.cases[law]
            self.failures[law] += other.failures[law]
            bucket = self.counterexamples.setdefault(law, [])
            for ce in other.counterexamples.get(law, []):
                if len(bucket) < self.keep:
                    bucket.append(ce)
        return self

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "laws": {
                law: {"cases": self.cases[law], "failures": self.failures[law]}
                for law in self.cases
            },
            "counterexamples": {k: v for k, v in self.counterexamples.items() if v},
        }

    def render(self) -> str:
        lines = [f"{self.name}: {'pass' if self.passed else 'FAIL'}"]
        for law in self.cases:
            status = "ok" if not self.failures[law] else "FAIL"
            lines.append(f"  {law}: {self.cases[law]} cases, {self.failures[law]} failures [{status}]")
            for ce in self.counterexamples.get(law, []):
                desc = ", ".join(f"{k}={v}" for k, v in ce.items())
                lines.append(f"    counterexample: {desc}")
        return "\n".join(lines)


def _plain(value: Any) -> Any:
    """Make counterexample values JSON friendly (Fractions become strings)."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=str)
        return items
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)
