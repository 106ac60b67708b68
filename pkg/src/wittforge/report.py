from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

STATUSES = ("OK", "FAIL", "SKIPPED", "ERROR")


@dataclass(frozen=True)
class ReportEntry:
    source_id: str
    status: str
    detail: str
    sort_key: tuple = ()

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class VerificationReport:
    title: str = ""
    entries: list[ReportEntry] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, source_id, status, detail, sort_key=()):
        self.entries.append(ReportEntry(source_id, status, detail, sort_key or (source_id,)))

    def extend(self, other: VerificationReport):
        self.entries.extend(other.entries)
        self.notes.extend(other.notes)

    def sorted_entries(self) -> list[ReportEntry]:
        return sorted(self.entries, key=lambda e: (e.sort_key, e.source_id))

    def counts(self) -> Counter:
        return Counter(e.status for e in self.entries)

    @property
    def ok(self) -> bool:
        c = self.counts()
        return c["FAIL"] == 0 and c["ERROR"] == 0

    def by_status(self, status: str) -> list[ReportEntry]:
        return [e for e in self.sorted_entries() if e.status == status]

    def render(self) -> str:
        lines = [f"# {self.title}"] if self.title else []
        for e in self.sorted_entries():
            lines.append(f"{e.status:<7} {e.source_id}  {e.detail}")
        lines.extend(f"note: {n}" for n in self.notes)
        c = self.counts()
        lines.append("summary: " + ", ".join(f"{s}={c.get(s, 0)}" for s in STATUSES))
        return "\n".join(lines)
