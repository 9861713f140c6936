"""Check reports carrying explicit witnesses instead of bare booleans."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Failure", "Report"]


@dataclass(frozen=True)
class Failure:
    """One failed check with the cell sets that witness it."""

    check: str
    witnesses: tuple[tuple[int, ...], ...] = ()
    detail: str = ""

    def render(self) -> str:
        sets = " ".join("{" + " ".join(map(str, w)) + "}" for w in self.witnesses)
        parts = [self.check]
        if sets:
            parts.append(sets)
        if self.detail:
            parts.append(self.detail)
        return " | ".join(parts)


@dataclass
class Report:
    """Outcome of a verification routine: PASS iff no failures."""

    name: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, witnesses=(), detail: str = "") -> None:
        self.failures.append(
            Failure(check, tuple(tuple(sorted(w)) for w in witnesses), detail)
        )

    def render(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name} ({self.checked} checks)"
        lines = [head]
        lines += [f"  {note}" for note in self.notes]
        lines += [f"  {f.render()}" for f in self.failures]
        return "\n".join(lines)
