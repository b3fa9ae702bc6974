"""Structured report: one JSON document per CLI invocation."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

FORMAT = "freebraid-report/1"


@dataclass
class Report:
    command: str
    argv: list[str]
    context: dict | None = None
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    verdict: str | None = None
    error: dict | None = None
    timing: dict | None = None

    def to_json(self) -> str:
        doc = {"format": FORMAT, **asdict(self)}
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        fmt = doc.pop("format", None)
        if fmt != FORMAT:
            raise ValueError(f"not a {FORMAT} document: {fmt!r}")
        return cls(**doc)

    def stable_view(self) -> dict:
        """Everything except wall-clock timing."""
        doc = asdict(self)
        doc.pop("timing")
        return doc
