"""Deterministic CSV / JSON writers shared by the command line."""

from __future__ import annotations

import io
import json
import sys
from fractions import Fraction

import numpy as np


def format_value(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.12g}"
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(f"{float(v):.12g}")
    return str(v)


def render(rows, fields, fmt: str = "csv") -> str:
    rows = list(rows)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(fields) + "\n")
        for row in rows:
            buf.write(",".join(format_value(row[f]) for f in fields) + "\n")
        return buf.getvalue()
    if fmt == "json":
        data = [{f: _json_value(row[f]) for f in fields} for row in rows]
        return json.dumps(data, indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit(rows, fields, fmt: str = "csv", output=None) -> None:
    """Write rows (mappings) with the given column order to a path or stdout."""
    text = render(rows, fields, fmt)
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    with open(output, "w", newline="") as fh:
        fh.write(text)
