"""Run reports shared by the command-line front end."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .inequalities import Verdict


@dataclass
class CheckResult:
    name: str
    counts: Counter = field(default_factory=Counter)
    notes: list[str] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    def add(self, verdict: Verdict) -> None:
        self.counts[verdict] += 1

    @property
    def falsified(self) -> int:
        return self.counts[Verdict.FALSIFIED]

    @property
    def inconclusive(self) -> int:
        return self.counts[Verdict.INCONCLUSIVE]

    def line(self) -> str:
        c = self.counts
        status = "FAIL" if self.falsified else "ok"
        return (
            f"[{status:>4}] {self.name}: verified={c[Verdict.VERIFIED]} "
            f"inconclusive={c[Verdict.INCONCLUSIVE]} falsified={c[Verdict.FALSIFIED]}"
        )


@dataclass
class RunReport:
    """What a command did: per-check verdict counts, enclosures, timings.

    Timings are kept out of :meth:`render` unless asked for, so a report for
    a fixed seed renders byte for byte the same on every run.
    """

    command: str
    checks: list[CheckResult] = field(default_factory=list)
    enclosures: list[tuple[str, str, str]] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def falsified(self) -> int:
        return sum(c.falsified for c in self.checks)

    @property
    def inconclusive(self) -> int:
        return sum(c.inconclusive for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 1 if self.falsified else 0

    def render(self, show_timings: bool = False) -> str:
        out = [f"$ {self.command}"]
        out.extend(self.lines)
        for label, lo, hi in self.enclosures:
            out.append(f"{label}: [{lo}, {hi}]")
        for check in self.checks:
            out.append(check.line())
            out.extend(f"       {note}" for note in check.notes)
        if self.checks:
            out.append(f"summary: falsified={self.falsified} inconclusive={self.inconclusive}")
            if not self.falsified and self.inconclusive:
                out.append(f"warning: {self.inconclusive} inconclusive verdicts at this precision")
        if show_timings:
            for step, seconds in self.timings.items():
                out.append(f"time {step}: {seconds:.3f}s")
        return "\n".join(out) + "\n"
