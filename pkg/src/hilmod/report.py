"""Report container and its JSON / CSV / text renderings.

Rendering is byte-deterministic: keys are sorted in JSON, columns follow the
first row's key order, and ``elapsed_ms`` is only written when asked for.
"""

import csv
import io
import json
from dataclasses import dataclass, field

from .rational import parse_rational, to_fixed

FORMATS = ("json", "csv", "text")


@dataclass
class Report:
    command: str
    parameters: dict
    rows: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def all_passed(self):
        return all(bool(r.get("passed", True)) for r in self.rows)

    def to_dict(self, timing=False):
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "rows": self.rows,
            "all_passed": self.all_passed,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _columns(rows):
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _with_decimals(rows, digits):
    out = []
    for r in rows:
        r2 = {}
        for k, v in r.items():
            r2[k] = v
            if isinstance(v, str) and "/" in v:
                r2[k + "_decimal"] = to_fixed(parse_rational(v), digits)
        out.append(r2)
    return out


def render(report, fmt="json", decimals=None, timing=False):
    rows = report.rows if decimals is None else _with_decimals(report.rows, decimals)
    if fmt == "json":
        d = report.to_dict(timing)
        d["rows"] = rows
        return json.dumps(d, sort_keys=True, indent=2) + "\n"
    cols = _columns(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in rows:
            writer.writerow([_cell(r.get(c, "")) for c in cols])
        return buf.getvalue()
    if fmt == "text":
        lines = [f"{report.command}: " + " ".join(f"{k}={v}" for k, v in sorted(report.parameters.items()))]
        table = [cols] + [[_cell(r.get(c, "")) for c in cols] for r in rows]
        if cols:
            widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
            for row in table:
                lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip())
        lines.append(f"all_passed: {_cell(report.all_passed)}")
        if timing:
            lines.append(f"elapsed_ms: {report.elapsed_ms}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
