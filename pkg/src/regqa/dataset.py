"""Numeric feature tables: CSV ingestion, validation and min-max scaling.

Every downstream quality criterion works either on raw columns or on a
min-max normalized view of the table, so this module is the single place
where shape, finiteness and naming rules are enforced.
"""

from __future__ import annotations

import csv
import io
import math
import os
from dataclasses import dataclass, field

import numpy as np


class InputDataError(ValueError):
    """Input cannot be turned into a valid feature matrix."""


@dataclass(frozen=True)
class DataMatrix:
    """An N x p table of finite real numbers with unique column names.

    Instances are immutable (the backing array is marked read-only) and
    therefore safe to share between threads.

    Parameters
    ----------
    values : array-like, shape (N, p)
        Feature values; every entry must be finite.
    column_names : sequence of str
        One unique name per column.
    dropped_rows : int
        Number of raw input rows discarded during ingestion (0 when the
        matrix was built directly).
    """

    values: np.ndarray
    column_names: tuple[str, ...] = ()
    dropped_rows: int = 0

    def __post_init__(self):
        arr = np.array(self.values, dtype=float, copy=True)
        if arr.ndim != 2:
            raise InputDataError(f"expected a 2-D table, got ndim={arr.ndim}")
        n, p = arr.shape
        if n < 2:
            raise InputDataError(f"need at least 2 rows, got {n}")
        if p < 1:
            raise InputDataError("need at least 1 column")
        if not np.all(np.isfinite(arr)):
            raise InputDataError("non-finite entries are not allowed")
        names = tuple(self.column_names) if self.column_names else tuple(
            f"x{j + 1}" for j in range(p))
        if len(names) != p:
            raise InputDataError(
                f"{len(names)} column names for {p} columns")
        if len(set(names)) != len(names):
            raise InputDataError("duplicate column names")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "column_names", names)

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_cols(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class NormalizedView:
    """Min-max normalized copy of a :class:`DataMatrix`.

    Non-constant columns are affinely mapped onto [0, 1]; constant columns
    carry no scale information and are set to 0.5 everywhere, with their
    indices recorded in ``constant_columns``.
    """

    values: np.ndarray
    column_names: tuple[str, ...]
    constant_columns: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "column_names", tuple(self.column_names))
        object.__setattr__(self, "constant_columns",
                           frozenset(self.constant_columns))

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_cols(self) -> int:
        return self.values.shape[1]


def normalize(data: DataMatrix) -> NormalizedView:
    """Map each column of ``data`` onto [0, 1] by its own min and max.

    The per-column map is strictly increasing, so value order inside a
    column is preserved exactly. Columns with zero spread become 0.5
    everywhere and are flagged rather than treated as an error.
    """
    out = np.array(data.values, dtype=float, copy=True)
    constant = set()
    for j in range(out.shape[1]):
        col = out[:, j]
        lo = col.min()
        hi = col.max()
        if hi == lo:
            out[:, j] = 0.5
            constant.add(j)
        else:
            out[:, j] = (col - lo) / (hi - lo)
    return NormalizedView(out, data.column_names, frozenset(constant))


def column(data: DataMatrix | NormalizedView, j: int) -> np.ndarray:
    """Return the j-th column, 1-based (j runs from 1 to p)."""
    p = data.values.shape[1]
    if not 1 <= j <= p:
        raise IndexError(f"column index {j} out of range 1..{p}")
    return data.values[:, j - 1].copy()


def _open_text(source) -> io.TextIOBase:
    if isinstance(source, (str, os.PathLike)):
        return open(source, "r", encoding="utf-8", newline="")
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, io.TextIOBase):
        return source
    if hasattr(source, "read"):
        raw = source.read()
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        return io.StringIO(raw)
    raise TypeError(f"cannot read CSV from {type(source)!r}")


def _parse_cell(cell: str) -> float | None:
    cell = cell.strip()
    if not cell:
        return None
    try:
        v = float(cell)
    except ValueError:
        return None
    if not math.isfinite(v):
        return None
    return v


def ingest_csv(source,
               *,
               delimiter: str = ",",
               header: bool = True,
               ignore_columns: tuple[str, ...] = ()) -> DataMatrix:
    """Read a numeric CSV into a :class:`DataMatrix`.

    Rows containing any missing or unparsable cell are dropped; the number
    of dropped rows is reported on the result. Decimal separator is always
    '.', the field separator is configurable. With ``header=False`` columns
    are named x1..xp.

    ``ignore_columns`` removes named columns (e.g. a target variable)
    before validation.

    Raises
    ------
    InputDataError
        On empty input, duplicate column names, a column with no parsable
        value at all, or fewer than 2 fully valid rows. The message names
        the first offending cell when one was seen.
    """
    stream = _open_text(source)
    try:
        rows = [r for r in csv.reader(stream, delimiter=delimiter)]
    finally:
        if stream is not source:
            stream.close()
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise InputDataError("empty input")

    if header:
        names = [c.strip() for c in rows[0]]
        data_rows = rows[1:]
    else:
        names = [f"x{j + 1}" for j in range(len(rows[0]))]
        data_rows = rows
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise InputDataError(f"duplicate column names: {', '.join(dupes)}")

    keep = [j for j, n in enumerate(names) if n not in set(ignore_columns)]
    missing = set(ignore_columns) - set(names)
    if missing:
        raise InputDataError(
            f"ignore_columns not present: {', '.join(sorted(missing))}")
    names = [names[j] for j in keep]
    p = len(names)
    if p < 1:
        raise InputDataError("no columns left after ignoring")
    if not data_rows:
        raise InputDataError("no data rows")

    parsed: list[list[float]] = []
    dropped = 0
    first_bad: tuple[int, str, str] | None = None
    col_ok = np.zeros(p, dtype=int)
    for i, raw in enumerate(data_rows, start=1):
        if len(raw) != len(rows[0]):
            dropped += 1
            if first_bad is None:
                first_bad = (i, "<row>", f"{len(raw)} fields, expected {len(rows[0])}")
            continue
        vals = []
        bad_here = None
        for pos, j in enumerate(keep):
            v = _parse_cell(raw[j])
            if v is None:
                if bad_here is None:
                    bad_here = (i, names[pos], raw[j].strip() or "<empty>")
            else:
                col_ok[pos] += 1
                vals.append(v)
        if bad_here is not None:
            dropped += 1
            if first_bad is None:
                first_bad = bad_here
            continue
        parsed.append(vals)

    detail = ""
    if first_bad is not None:
        detail = (f" (first bad cell: row {first_bad[0]},"
                  f" column {first_bad[1]!r}, value {first_bad[2]!r})")
    dead = [names[pos] for pos in range(p) if col_ok[pos] == 0]
    if dead:
        raise InputDataError(
            f"column entirely missing or unparsable: {', '.join(dead)}{detail}")
    if len(parsed) < 2:
        raise InputDataError(
            f"fewer than 2 valid rows ({len(parsed)} parsed){detail}")
    return DataMatrix(np.asarray(parsed, dtype=float), tuple(names),
                      dropped_rows=dropped)


def write_csv(data: DataMatrix, destination) -> None:
    """Write ``data`` as CSV with full double precision (17 significant digits)."""
    own = isinstance(destination, (str, os.PathLike))
    fh = open(destination, "w", encoding="utf-8", newline="") if own else destination
    try:
        writer = csv.writer(fh)
        writer.writerow(data.column_names)
        for row in data.values:
            writer.writerow([format(v, ".17g") for v in row])
    finally:
        if own:
            fh.close()
