"""Check records and their JSON / CSV / text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

SCHEMA_VERSION = "trigraph-report/1"
VERDICTS = ("pass", "fail", "computed-no-expectation")


@dataclass(frozen=True)
class Record:
    id: str
    reference: str
    expected: Any
    computed: Any
    verdict: str

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")


def plain(x: Any) -> Any:
    """Make a value JSON-friendly: integral fractions become ints, others strings."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    return x


def compare(id: str, reference: str, expected: Any, computed: Any) -> Record:
    expected, computed = plain(expected), plain(computed)
    return Record(id, reference, expected, computed, "pass" if expected == computed else "fail")


def info(id: str, reference: str, computed: Any) -> Record:
    return Record(id, reference, None, plain(computed), "computed-no-expectation")


def ratio(id: str, reference: str, passed: int, total: int) -> Record:
    """Trial batch: expected ``total/total``."""
    return compare(id, reference, f"{total}/{total}", f"{passed}/{total}")


@dataclass
class Report:
    suite: str
    config: Dict[str, Any]
    records: List[Record] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    def sorted_records(self) -> List[Record]:
        return sorted(self.records, key=lambda r: r.id)

    def counts(self) -> Dict[str, int]:
        return {v: sum(1 for r in self.records if r.verdict == v) for v in VERDICTS}

    @property
    def ok(self) -> bool:
        return not any(r.verdict == "fail" for r in self.records)

    def to_dict(self) -> Dict[str, Any]:
        out = {"schema": SCHEMA_VERSION, "suite": self.suite, "config": self.config,
               "summary": self.counts(), "records": [asdict(r) for r in self.sorted_records()]}
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "reference", "expected", "computed", "verdict"])
        for r in self.sorted_records():
            w.writerow([r.id, r.reference, _cell(r.expected), _cell(r.computed), r.verdict])
        return buf.getvalue()

    def to_text(self) -> str:
        recs = self.sorted_records()
        width = max((len(r.id) for r in recs), default=2)
        lines = [f"suite {self.suite}"]
        for r in recs:
            exp = "-" if r.expected is None else _cell(r.expected)
            label = {"pass": "PASS", "fail": "FAIL"}.get(r.verdict, "INFO")
            lines.append(f"{label:<4} {r.id:<{width}}  expected={exp}  computed={_cell(r.computed)}")
        c = self.counts()
        lines.append(f"{c['pass']} pass, {c['fail']} fail, {c['computed-no-expectation']} informational")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()


def _cell(x: Any) -> str:
    return x if isinstance(x, str) else json.dumps(x, sort_keys=True)
