"""CSV reading and writing for sampled series.

Comma delimiter, period decimal separator, UTF-8. Input may carry an
optional header line and either two columns (time, value) or a single value
column, which gets implicit unit-step times 0, 1, 2, ... Output always
writes a ``time,value`` header and 17 significant digits so a written series
reads back bit-faithfully.
"""

from __future__ import annotations

import os
import tempfile

import numpy as np

from .series import TimeSeries

__all__ = ["read_csv", "write_csv"]


def read_csv(path: str) -> TimeSeries:
    """Parse a series from ``path``; malformed rows name their line number."""
    times: list[float] = []
    values: list[float] = []
    ncols = 0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            fields = [f.strip() for f in line.split(",")]
            try:
                numbers = [float(f) for f in fields]
            except ValueError:
                # a fully non-numeric first line is a header; anything else is bad data
                if lineno == 1 and not any(_is_number(f) for f in fields):
                    continue
                raise ValueError(f"{path}: line {lineno}: non-numeric row {line!r}") from None
            if len(numbers) not in (1, 2):
                raise ValueError(
                    f"{path}: line {lineno}: expected 1 or 2 columns, got {len(numbers)}"
                )
            if ncols == 0:
                ncols = len(numbers)
            elif len(numbers) != ncols:
                raise ValueError(
                    f"{path}: line {lineno}: column count changed from {ncols} "
                    f"to {len(numbers)}"
                )
            if ncols == 1:
                values.append(numbers[0])
            else:
                times.append(numbers[0])
                values.append(numbers[1])
    if ncols == 1:
        times = list(range(len(values)))
    try:
        return TimeSeries(np.asarray(times), np.asarray(values))
    except ValueError as err:
        raise ValueError(f"{path}: {err}") from None


def _is_number(field: str) -> bool:
    try:
        float(field)
    except ValueError:
        return False
    return True


def write_csv(series: TimeSeries, path: str) -> None:
    """Write ``time,value`` rows atomically (temp file plus rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write("time,value\n")
            for t, v in zip(series.times, series.values):
                fh.write(f"{t:.17g},{v:.17g}\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
