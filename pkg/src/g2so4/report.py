"""Report entries and their text / JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

VERIFIED = "Verified"
VERIFIED_MOD_TORUS = "VerifiedModTorus"
FAILED = "Failed"
UNVERIFIED = "Unverified"
UNRESOLVED = "Unresolved"
STATUSES = (VERIFIED, VERIFIED_MOD_TORUS, FAILED, UNVERIFIED, UNRESOLVED)

PLUMBING = "plumbing"


@dataclass
class ReportEntry:
    suite: str
    check_id: str
    anchor: str
    status: str
    params: dict = field(default_factory=dict)
    detail: str = ""
    residual: tuple = ()        # canonical RatFunc strings
    elapsed: float | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        self.residual = tuple(str(r) for r in self.residual)
        self.params = {str(k): _plain(v) for k, v in self.params.items()}

    @property
    def key(self):
        return (self.suite, self.check_id)

    def to_dict(self, timings: bool = False) -> dict:
        d = {"suite": self.suite, "id": self.check_id, "anchor": self.anchor,
             "status": self.status, "params": self.params}
        if self.detail:
            d["detail"] = self.detail
        if self.residual:
            d["residual"] = list(self.residual)
        if timings and self.elapsed is not None:
            d["elapsed"] = round(self.elapsed, 4)
        return d


def _plain(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return str(v)


def ok_status(ok: bool) -> str:
    return VERIFIED if ok else FAILED


def sort_entries(entries) -> list:
    return sorted(entries, key=lambda e: e.key)


def summary(entries) -> dict:
    counts = {s: 0 for s in STATUSES}
    for e in entries:
        counts[e.status] += 1
    return counts


def to_json(entries, meta: dict, timings: bool = False) -> str:
    entries = sort_entries(entries)
    doc = {"meta": dict(meta, summary=summary(entries)),
           "entries": [e.to_dict(timings) for e in entries]}
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def to_text(entries, meta: dict, timings: bool = False) -> str:
    entries = sort_entries(entries)
    lines = [f"# {k}: {v}" for k, v in sorted(meta.items())]
    width = max((len(e.check_id) for e in entries), default=10)
    for e in entries:
        line = f"{e.status:<17} {e.suite:<10} {e.check_id:<{width}}"
        if e.detail:
            line += f"  {e.detail}"
        if timings and e.elapsed is not None:
            line += f"  [{e.elapsed:.3f}s]"
        lines.append(line.rstrip())
        for r in e.residual:
            lines.append(f"{'':<17} residual: {r}")
    counts = summary(entries)
    lines.append("# summary: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    return "\n".join(lines) + "\n"
