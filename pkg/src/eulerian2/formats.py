"""Serialization of exact values, identity reports and OEIS b-files."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .identities import IdentityReport
from .polynomial import Polynomial, format_rational

FORMATS = ("plain", "csv", "json", "bfile")

REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "params", "lhs", "rhs", "holds"],
    "additionalProperties": False,
    "properties": {
        "identity": {"type": "string"},
        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
        "lhs": {"oneOf": [{"type": "string"}, {"type": "array", "items": {"type": "string"}}]},
        "rhs": {"oneOf": [{"type": "string"}, {"type": "array", "items": {"type": "string"}}]},
        "holds": {"type": "boolean"},
        "note": {"type": "string"},
    },
}


def serialize_value(value):
    """Rationals become ``"p/q"`` strings; polynomials and tuples become arrays of them."""
    if value is None:
        return "undefined"
    if isinstance(value, Polynomial):
        return [format_rational(c) for c in value.coeffs]
    if isinstance(value, (tuple, list)):
        return [format_rational(c) for c in value]
    return format_rational(value)


def report_to_dict(report: IdentityReport) -> dict:
    out = {
        "identity": report.identity,
        "params": dict(report.params),
        "lhs": serialize_value(report.lhs),
        "rhs": serialize_value(report.rhs),
        "holds": report.holds,
    }
    if report.note:
        out["note"] = report.note
    return out


def reports_to_json(reports: Iterable[IdentityReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2)


def _flat(value) -> str:
    v = serialize_value(value)
    return v if isinstance(v, str) else "[" + ", ".join(v) + "]"


def report_to_line(report: IdentityReport) -> str:
    status = "PASS" if report.holds else ("EXPECTED-FAIL" if not report.expected else "FAIL")
    params = " ".join(f"{k}={v}" for k, v in report.params.items())
    line = f"{status} {report.identity} {params} lhs={_flat(report.lhs)} rhs={_flat(report.rhs)}"
    if report.note:
        line += f" # {report.note}"
    return line


def reports_to_csv(reports: Iterable[IdentityReport], header: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(["identity", "params", "lhs", "rhs", "holds", "note"])
    for r in reports:
        params = ";".join(f"{k}={v}" for k, v in r.params.items())
        w.writerow([r.identity, params, _flat(r.lhs), _flat(r.rhs), str(r.holds).lower(), r.note or ""])
    return buf.getvalue()


def values_to_csv(rows: Sequence[Sequence], header: Sequence[str] | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    for row in rows:
        w.writerow([format_rational(v) for v in row])
    return buf.getvalue()


def write_bfile(values: Iterable, offset: int = 0) -> str:
    """One ``n a(n)`` line per term; every term must be an integer."""
    lines = []
    for i, v in enumerate(values, start=offset):
        q = Fraction(v)
        if q.denominator != 1:
            raise ValueError(f"b-files hold integer sequences only; term {i} is {format_rational(q)}")
        lines.append(f"{i} {q.numerator}\n")
    return "".join(lines)


def read_bfile(text: str) -> tuple[int, list[int]]:
    """Parse a b-file into ``(offset, terms)``; comment lines starting with ``#`` are skipped."""
    indices, terms = [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        i, v = line.split()
        indices.append(int(i))
        terms.append(int(v))
    if not indices:
        return 0, []
    if indices != list(range(indices[0], indices[0] + len(indices))):
        raise ValueError("b-file indices are not consecutive")
    return indices[0], terms
