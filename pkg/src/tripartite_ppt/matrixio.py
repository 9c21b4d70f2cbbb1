"""JSON text format for density matrices.

A document looks like::

    {
      "basis": "ABC",
      "dim": 8,
      "entries": [
        [[0.5, 0.0], [0.0, 0.0], ...],
        ...
      ],
      "label": "ghz"
    }

``basis`` is ``"ABC"`` (row index 4i+2j+k) for 8x8 and ``"XY"`` (2m+n) for
4x4. Reals are written with Python's shortest round-trip ``repr``, so a
write/read cycle reproduces every entry bit for bit. Keys are sorted.
"""
from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidInput

BASIS_FOR_DIM = {8: "ABC", 4: "XY"}


class MatrixFormatError(InvalidInput):
    pass


@dataclass(frozen=True)
class MatrixFile:
    matrix: np.ndarray
    basis: str
    label: Optional[str] = None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def dumps(matrix, label: Optional[str] = None) -> str:
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in BASIS_FOR_DIM:
        raise MatrixFormatError(f"cannot serialize matrix of shape {m.shape}")
    dim = m.shape[0]
    rows = [
        json.dumps([[float(z.real), float(z.imag)] for z in row], allow_nan=False)
        for row in m
    ]
    lines = ["{", f'  "basis": {json.dumps(BASIS_FOR_DIM[dim])},', f'  "dim": {dim},', '  "entries": [']
    lines += [f"    {r}," for r in rows[:-1]] + [f"    {rows[-1]}"]
    if label is None:
        lines += ["  ]", "}"]
    else:
        lines += ["  ],", f'  "label": {json.dumps(label)}', "}"]
    return "\n".join(lines) + "\n"


def _reject_constant(name):
    raise MatrixFormatError(f"non-finite number {name} in matrix file")


def loads(text: str) -> MatrixFile:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MatrixFormatError("top level must be a JSON object")
    missing = {"dim", "entries", "basis"} - doc.keys()
    if missing:
        raise MatrixFormatError(f"missing keys: {', '.join(sorted(missing))}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim not in BASIS_FOR_DIM:
        raise MatrixFormatError(f"dim must be 4 or 8, got {dim!r}")
    basis = doc["basis"]
    if basis != BASIS_FOR_DIM[dim]:
        raise MatrixFormatError(f"basis {basis!r} does not match dim {dim} (expected {BASIS_FOR_DIM[dim]!r})")
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise MatrixFormatError("label must be a string")

    rows = doc["entries"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise MatrixFormatError(f"entries must be a list of {dim} rows")
    m = np.empty((dim, dim), dtype=np.complex128)
    for a, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise MatrixFormatError(f"row {a} must have {dim} entries")
        for b, pair in enumerate(row):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
            ):
                raise MatrixFormatError(f"entry ({a}, {b}) must be a [re, im] pair of numbers")
            re, im = float(pair[0]), float(pair[1])
            if not (math.isfinite(re) and math.isfinite(im)):
                raise MatrixFormatError(f"entry ({a}, {b}) is not finite")
            m[a, b] = complex(re, im)
    return MatrixFile(m, basis, label)


def read(path: str) -> MatrixFile:
    """Read a matrix file; ``"-"`` reads stdin."""
    if path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}") from None


def write(path: Optional[str], matrix, label: Optional[str] = None) -> None:
    text = dumps(matrix, label)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
