"""Report payloads and their text, CSV and JSON renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import List, Optional, Sequence

from ..exact import RayVerdict, format_scalar, scalar, to_float

SCHEMA_ID = "logbehave-report/1"


def exact(v) -> str:
    return format_scalar(v)


def approx(v) -> str:
    """Exact value, with a decimal approximation for non-integers."""
    s = exact(v)
    v = scalar(v)
    if isinstance(v, Fraction) and v.denominator == 1:
        return s
    return f"{s} ≈ {to_float(v):.10g}"


def verdict_dict(label: str, v: Optional[RayVerdict]) -> Optional[dict]:
    if v is None:
        return None
    return {
        "label": label,
        "status": str(v.status),
        "witness": None if v.witness is None else exact(v.witness),
        "shift": v.shift_used,
        "note": v.note,
    }


def base_dict(b) -> dict:
    return {"n": b.n, "kind": b.kind, "ok": b.ok, "detail": b.detail}


@dataclass
class Result:
    """One command's outcome: exit code, machine payload, table and text lines."""

    command: str
    code: int
    payload: dict
    header: Sequence[str] = ()
    rows: List[Sequence] = field(default_factory=list)
    text: List[str] = field(default_factory=list)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            doc = {"schema": SCHEMA_ID, "command": self.command, "exit_code": self.code,
                   "result": self.payload}
            return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if self.header:
                w.writerow(self.header)
                w.writerows(self.rows)
            else:
                w.writerow(("key", "value"))
                for k in sorted(self.payload):
                    v = self.payload[k]
                    if not isinstance(v, (list, dict)):
                        w.writerow((k, "" if v is None else v))
            return buf.getvalue()
        return "\n".join(self.text) + "\n" if self.text else ""


def load_schema() -> dict:
    with resources.files("logbehave.cli").joinpath("report_schema.json").open(encoding="utf-8") as fh:
        return json.load(fh)
