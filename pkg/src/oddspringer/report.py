"""Check records shared by the verification suites, serialized as JSON lines."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable


@dataclass
class CheckRecord:
    relation_id: str
    status: str  # "pass" | "fail"
    n: int | None = None
    dmax: int | None = None
    counterexample: str | None = None
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v is not None and v != {}}
        return json.dumps(data, sort_keys=True)


def record(relation_id: str, ok: bool, **kw) -> CheckRecord:
    return CheckRecord(relation_id, "pass" if ok else "fail", **kw)


def all_passed(records: Iterable[CheckRecord]) -> bool:
    return all(r.passed for r in records)


def to_json_lines(records: Iterable[CheckRecord]) -> str:
    return "\n".join(r.to_json() for r in records)
