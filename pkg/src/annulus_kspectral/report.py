"""Flat records and their CSV / JSON / table serializations.

CSV numbers use 17 significant digits, so parsing and re-writing a file
reproduces it byte for byte. JSON uses Python's shortest round-trip repr.
"""

from __future__ import annotations

import csv
import io
import json
import math
from decimal import Decimal, InvalidOperation
from typing import IO, Iterable, Sequence

from .bounds import BoundValue
from .certificate import CertificateResult
from .supnorm import SupNormResult

CERTIFICATE_COLUMNS = (
    "R", "n", "m", "h_norm", "image_norm", "ratio", "closed_form",
    "paper_chain_value", "window_lo", "window_hi", "error",
)
BOUND_COLUMNS = (
    "R", "name", "kind", "value", "truncation_terms", "tail_bound", "flags", "ordering_ok",
)
SUPNORM_COLUMNS = ("R", "value", "argmax_radius", "argmax_angle", "samples_per_circle")


def certificate_row(result: CertificateResult) -> dict:
    p = result.params
    return {
        "R": p.R,
        "n": p.n,
        "m": p.m,
        "h_norm": result.h_norm,
        "image_norm": result.image_norm,
        "ratio": result.ratio,
        "closed_form": result.closed_form,
        "paper_chain_value": result.paper_chain_value,
        "window_lo": result.window.lo,
        "window_hi": result.window.hi,
        "error": result.error,
    }


def bound_rows(R: float, table: Sequence[BoundValue], ordering_ok: bool) -> list[dict]:
    return [
        {
            "R": R,
            "name": b.name,
            "kind": b.kind,
            "value": b.value,
            "truncation_terms": b.truncation_terms,
            "tail_bound": b.tail_bound,
            "flags": ";".join(b.flags),
            "ordering_ok": ordering_ok,
        }
        for b in table
    ]


def supnorm_row(R: float, result: SupNormResult) -> dict:
    return {
        "R": R,
        "value": result.value,
        "argmax_radius": result.argmax_radius,
        "argmax_angle": result.argmax_angle,
        "samples_per_circle": result.samples_per_circle,
    }


def format_csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def write_csv(rows: Iterable[dict], columns: Sequence[str], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_csv_value(row[c]) for c in columns])


def _parse_cell(text: str):
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def read_csv(stream: IO[str]) -> tuple[list[str], list[dict]]:
    """Parse a CSV written by :func:`write_csv` back into typed rows."""
    reader = csv.reader(stream)
    columns = next(reader)
    rows = [dict(zip(columns, map(_parse_cell, record))) for record in reader]
    return columns, rows


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def to_json(records, columns: Sequence[str]) -> str:
    if isinstance(records, dict):
        payload = {c: _json_value(records[c]) for c in columns}
    else:
        payload = [{c: _json_value(r[c]) for c in columns} for r in records]
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _table_cell(v) -> str:
    if isinstance(v, float):
        return format(v, ".10g")
    return format_csv_value(v)


def to_table(rows: Sequence[dict], columns: Sequence[str]) -> str:
    cells = [[_table_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells)
    return "\n".join(lines) + "\n"


def render(rows: Sequence[dict], columns: Sequence[str], fmt: str, single: bool = False) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        write_csv(rows, columns, buf)
        return buf.getvalue()
    if fmt == "json":
        return to_json(rows[0] if single else rows, columns)
    if fmt == "table":
        return to_table(rows, columns)
    raise ValueError(f"unknown format {fmt!r}")


def parse_int_spec(spec: str) -> list[int]:
    """``"2..10"`` (inclusive), ``"3,10,100"``, or a mix like ``"2..4,8"``."""
    values: list[int] = []
    for item in _items(spec):
        try:
            if ".." in item:
                lo, hi = item.split("..")
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise ValueError(f"empty range {item!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(item))
        except ValueError as exc:
            raise ValueError(f"cannot parse integer spec {spec!r}: {exc}") from None
    return values


def parse_real_spec(spec: str) -> list[float]:
    """``"1.5:3:0.5"`` (inclusive, decimal-exact steps), ``"1.1,2,5"``, or a mix."""
    values: list[float] = []
    for item in _items(spec):
        try:
            if ":" in item:
                lo, hi, step = (Decimal(x) for x in item.split(":"))
                if step <= 0 or hi < lo:
                    raise ValueError(f"bad range {item!r}")
                count = int((hi - lo) / step) + 1
                values.extend(float(lo + i * step) for i in range(count))
            else:
                values.append(float(Decimal(item)))
        except (ValueError, InvalidOperation, ArithmeticError):
            raise ValueError(f"cannot parse real spec {spec!r}") from None
    return values


def _items(spec: str) -> list[str]:
    items = [s.strip() for s in spec.split(",")]
    if not spec.strip() or any(not s for s in items):
        raise ValueError(f"empty value in spec {spec!r}")
    return items


def parse_coeff_spec(spec: str) -> dict[int, float]:
    """``"-2:0.25,2:0.25"`` into ``{-2: 0.25, 2: 0.25}``; repeated degrees add up."""
    coeffs: dict[int, float] = {}
    for item in _items(spec):
        try:
            deg, c = item.split(":")
            coeffs[int(deg)] = coeffs.get(int(deg), 0.0) + float(c)
        except ValueError:
            raise ValueError(f"cannot parse coefficient {item!r} (expected degree:value)") from None
    return coeffs
