"""Deterministic reports.

The canonical JSON body contains no timestamps or durations, so identical
inputs and flags produce byte-identical output; wall-clock timing only ever
appears in the human-readable text channel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

STATUSES = ("pass", "fail", "error", "not-applicable")


@dataclass
class Report:
    task: str
    status: str
    transcript: list = field(default_factory=list)
    statistics: dict = field(default_factory=dict)
    version: str = ""

    def add(self, check, outcome, witness=""):
        self.transcript.append({"check": check, "outcome": outcome, "witness": str(witness)})

    def body(self):
        return {
            "schema": SCHEMA_VERSION,
            "tool": "twocheck",
            "version": self.version,
            "task": self.task,
            "status": self.status,
            "transcript": self.transcript,
            "statistics": {"counts": dict(sorted(self.statistics.items()))},
        }

    def to_json(self):
        return json.dumps(self.body(), sort_keys=True, indent=1)

    def to_text(self, duration=None):
        lines = [f"task {self.task}: {self.status.upper()}"]
        for entry in self.transcript:
            witness = f"  [{entry['witness']}]" if entry["witness"] else ""
            lines.append(f"  {entry['check']}: {entry['outcome']}{witness}")
        if self.statistics:
            stats = ", ".join(f"{k}={v}" for k, v in sorted(self.statistics.items()))
            lines.append(f"  statistics: {stats}")
        if duration is not None:
            lines.append(f"  duration: {duration:.3f}s")
        return "\n".join(lines)


def qualify(K, cell):
    """Fully qualified identifier for a cell of a 2-category."""
    if cell in K.two_cell_hom:
        a, b = K.two_cell_hom[cell]
        return f"{K.name}.hom({a},{b}).{cell}"
    if cell in K.one_cell_hom:
        a, b = K.one_cell_hom[cell]
        return f"{K.name}.hom({a},{b}).{cell}"
    return f"{K.name}.{cell}"


def aggregate_json(reports):
    return json.dumps(
        {
            "schema": SCHEMA_VERSION,
            "tool": "twocheck",
            "reports": [r.body() for r in reports],
            "summary": {
                "total": len(reports),
                "pass": sum(1 for r in reports if r.status == "pass"),
                "fail": sum(1 for r in reports if r.status == "fail"),
                "error": sum(1 for r in reports if r.status == "error"),
                "not-applicable": sum(1 for r in reports if r.status == "not-applicable"),
            },
        },
        sort_keys=True,
        indent=1,
    )
