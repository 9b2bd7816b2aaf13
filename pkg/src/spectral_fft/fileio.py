"""Support documents (JSON) and index,re,im record files (CSV)."""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .digit_table import IndexSet
from .errors import InvalidParameterError, ParseError

HEADER = ["index", "re", "im"]


def read_support(path) -> IndexSet:
    """Load ``{"n": <int>, "support": [<int>, ...]}``."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(path, exc.msg, exc.lineno) from exc
    except OSError as exc:
        raise ParseError(path, str(exc)) from exc
    if not isinstance(doc, dict) or "n" not in doc or "support" not in doc:
        raise ParseError(path, 'expected an object with fields "n" and "support"', 1)
    n, support = doc["n"], doc["support"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(path, f'"n" must be an integer, got {n!r}')
    if not isinstance(support, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in support):
        raise ParseError(path, '"support" must be a list of integers')
    try:
        return IndexSet(n, tuple(support))
    except (InvalidParameterError, ValueError) as exc:
        raise ParseError(path, str(exc)) from exc


def write_support(path, n: int, support) -> None:
    Path(path).write_text(json.dumps({"n": int(n), "support": [int(v) for v in support]}) + "\n")


def read_records(path):
    """Return (indices, complex values) from an ``index,re,im`` file."""
    path = Path(path)
    try:
        handle = path.open(newline="")
    except OSError as exc:
        raise ParseError(path, str(exc)) from exc
    indices, values = [], []
    with handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != HEADER:
            raise ParseError(path, f"expected header {','.join(HEADER)}", 1)
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 3:
                raise ParseError(path, f"expected 3 fields, got {len(row)}", line)
            try:
                indices.append(int(row[0]))
                values.append(complex(float(row[1]), float(row[2])))
            except ValueError as exc:
                raise ParseError(path, str(exc), line) from exc
    return indices, np.array(values, dtype=complex)


def format_records(indices, values) -> str:
    lines = [",".join(HEADER)]
    for i, v in zip(indices, values):
        v = complex(v)
        lines.append(f"{int(i)},{v.real:.17g},{v.imag:.17g}")
    return "\n".join(lines) + "\n"


def write_records(path, indices, values) -> None:
    Path(path).write_text(format_records(indices, values))
