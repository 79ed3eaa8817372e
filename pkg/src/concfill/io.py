"""State files and CSV/JSON tables."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .linalg import InvalidStateError

__all__ = ["LOAD_NORM_TOL", "format_number", "load_state", "save_state", "table_to_csv", "table_to_json"]

#: tolerance on the norm of a state file before renormalization
LOAD_NORM_TOL = 1e-6


def load_state(path) -> np.ndarray:
    """Read ``[[re, im], ...]`` (eight pairs, basis order) and renormalize exactly."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidStateError(f"cannot read state file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidStateError(f"state file {path} is not valid JSON: {exc.msg}") from None
    if not isinstance(data, list) or len(data) != 8:
        raise InvalidStateError("state file must hold an array of 8 [re, im] pairs")
    amps = np.empty(8, dtype=complex)
    for i, pair in enumerate(data):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise InvalidStateError(f"entry {i} must be a pair of numbers [re, im]")
        amps[i] = complex(pair[0], pair[1])
    if not np.all(np.isfinite(amps)):
        raise InvalidStateError("amplitudes must be finite")
    norm = np.linalg.norm(amps)
    if abs(norm - 1) > LOAD_NORM_TOL:
        raise InvalidStateError(f"state norm is {norm:.12g}, expected 1 within {LOAD_NORM_TOL:g}")
    return amps / norm


def save_state(path, psi) -> None:
    psi = np.asarray(psi, dtype=complex)
    Path(path).write_text(json.dumps([[float(z.real), float(z.imag)] for z in psi]) + "\n")


def format_number(x) -> str:
    """Full double precision (17 significant digits)."""
    return format(float(x), ".17g")


def table_to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def table_to_json(header, rows) -> str:
    """Records keyed by column; floats round-trip to the same 17-digit values as the CSV."""
    records = [
        {k: float(format_number(v)) if isinstance(v, (float, np.floating)) else v for k, v in zip(header, row)}
        for row in rows
    ]
    return json.dumps(records, indent=2) + "\n"
