"""JSON documents for realizations.

A document looks like::

    {"n": 1, "p": 1, "m": 1,
     "A": [[[-1.0, 0.0]]], "B": [[[1.0, 0.0]]],
     "C": [[[1.0, 0.0]]], "D": [[[0.0, 0.0]]],
     "name": "optional", "notes": "optional"}

Entries are ``[re, im]`` pairs; a bare real number is accepted on input.
Floats are written with Python's shortest round-trip representation, so
``load(save(R))`` reproduces every entry bit for bit.
"""
import json
import math

import numpy as np

from .errors import DimensionMismatch
from .realization import Realization

__all__ = [
    "DocumentError",
    "encode_matrix",
    "decode_matrix",
    "realization_to_dict",
    "realization_from_dict",
    "dumps",
    "loads",
    "load",
    "save",
]


class DocumentError(ValueError):
    """Malformed realization or network document."""


def _number(x, where):
    if isinstance(x, bool):
        raise DocumentError(f"{where}: booleans are not numbers")
    if isinstance(x, (int, float)):
        re, im = float(x), 0.0
    elif isinstance(x, (list, tuple)) and len(x) == 2 and all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in x):
        re, im = float(x[0]), float(x[1])
    else:
        raise DocumentError(f"{where}: expected a number or an [re, im] pair, got {x!r}")
    if not (math.isfinite(re) and math.isfinite(im)):
        raise DocumentError(f"{where}: entries must be finite")
    return complex(re, im)


def encode_matrix(M):
    """Nested ``[re, im]`` lists, row major."""
    M = np.asarray(M, dtype=complex)
    if not np.all(np.isfinite(M)):
        raise DocumentError("cannot encode non-finite entries")
    return [[[float(v.real), float(v.imag)] for v in row] for row in M]


def decode_matrix(data, shape, name="matrix"):
    """Inverse of :func:`encode_matrix`, checked against ``shape``."""
    rows, cols = shape
    if not isinstance(data, list):
        raise DocumentError(f"{name}: expected a list of rows")
    if rows * cols == 0:
        # empty blocks may be written as [] or as a list of empty rows
        if any(not isinstance(r, list) or r for r in data) or len(data) not in (0, rows):
            raise DimensionMismatch(f"{name}: expected an empty {rows}x{cols} matrix")
        return np.zeros((rows, cols), dtype=complex)
    if len(data) != rows or any(not isinstance(r, list) or len(r) != cols for r in data):
        raise DimensionMismatch(f"{name}: expected {rows}x{cols} entries")
    out = np.empty((rows, cols), dtype=complex)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            out[i, j] = _number(x, f"{name}[{i}][{j}]")
    return out


def _count(doc, key):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise DocumentError(f"'{key}' must be a non-negative integer")
    return v


def realization_to_dict(R, name=None, notes=None):
    n, p, m = R.shape
    doc = {"n": n, "p": p, "m": m,
           "A": encode_matrix(R.A), "B": encode_matrix(R.B),
           "C": encode_matrix(R.C), "D": encode_matrix(R.D)}
    if name is not None:
        doc["name"] = name
    if notes is not None:
        doc["notes"] = notes
    return doc


def realization_from_dict(doc):
    """Build a :class:`Realization` from a parsed document."""
    if not isinstance(doc, dict):
        raise DocumentError("a realization document must be a JSON object")
    missing = [k for k in ("n", "p", "m", "A", "B", "C", "D") if k not in doc]
    if missing:
        raise DocumentError(f"missing fields: {', '.join(missing)}")
    n, p, m = (_count(doc, k) for k in ("n", "p", "m"))
    A = decode_matrix(doc["A"], (n, n), "A")
    B = decode_matrix(doc["B"], (n, m), "B")
    C = decode_matrix(doc["C"], (p, n), "C")
    D = decode_matrix(doc["D"], (p, m), "D")
    if n == 0:
        return Realization.constant(D)
    return Realization(A, B, C, D)


def dumps(R, name=None, notes=None):
    """Document text with one matrix row per line."""
    doc = realization_to_dict(R, name, notes)
    lines = []
    for key, value in doc.items():
        if key in ("A", "B", "C", "D"):
            rows = [json.dumps(row) for row in value]
            body = "[]" if not rows else "[\n  " + ",\n  ".join(rows) + "\n ]"
        else:
            body = json.dumps(value)
        lines.append(f" {json.dumps(key)}: {body}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return realization_from_dict(doc)


def save(R, path, name=None, notes=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(R, name, notes))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
