"""JSON state files: ``{"d_h": int, "d_k": int, "matrix": [[[re, im], ...], ...]}``.

Rows are in the flat product basis ``i * d_k + a``; reals are written with
17 significant digits so doubles round-trip exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import ValidationError


def _num(x: float) -> str:
    return format(float(x), ".17g")


def dumps_state(matrix: np.ndarray, d_h: int, d_k: int) -> str:
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (d_h * d_k, d_h * d_k):
        raise ValidationError(f"matrix shape {matrix.shape} does not match dims {d_h}x{d_k}")
    rows = []
    for row in matrix:
        cells = ", ".join(f"[{_num(z.real)}, {_num(z.imag)}]" for z in row)
        rows.append(f"    [{cells}]")
    body = ",\n".join(rows)
    return f'{{\n  "d_h": {d_h},\n  "d_k": {d_k},\n  "matrix": [\n{body}\n  ]\n}}\n'


def write_state(path, matrix: np.ndarray, d_h: int, d_k: int) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_state(matrix, d_h, d_k))


def loads_state(text: str) -> tuple[np.ndarray, int, int]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"state file is not valid JSON: {exc}") from exc
    try:
        d_h, d_k = int(obj["d_h"]), int(obj["d_k"])
        arr = np.asarray(obj["matrix"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed state file: {exc}") from exc
    n = d_h * d_k
    if arr.shape != (n, n, 2):
        raise ValidationError(f"matrix has shape {arr.shape[:-1] if arr.ndim else arr.shape}, expected ({n}, {n}) of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1], d_h, d_k


def read_state(path) -> tuple[np.ndarray, int, int]:
    with open(path, encoding="utf-8") as fh:
        return loads_state(fh.read())
