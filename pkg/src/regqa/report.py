"""Serialization of quality reports: JSON, flat CSV table and plot data.

The JSON layout is stable (fixed key order, numbers rounded to a fixed
number of decimals unless full precision is requested), so a report is
byte-identical across runs with the same seed.
"""

from __future__ import annotations

import dataclasses
import io
import json
import os
import re

import numpy as np

from .criteria import QualityReport
from .dataset import DataMatrix


def _round(value, precision):
    if isinstance(value, float):
        if precision == "full":
            return value
        return round(value, precision)
    if isinstance(value, dict):
        return {k: _round(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v, precision) for v in value]
    return value


def report_to_dict(report: QualityReport, precision: int | str = 6) -> dict:
    """Plain-dict form of a report, ready for ``json.dumps``."""
    doc = {
        "dataset": {
            "name": report.dataset_name,
            "rows": report.n_rows,
            "cols": report.n_cols,
            "dropped_rows": report.dropped_rows,
            "constant_columns": list(report.constant_columns),
        },
        "config": dataclasses.asdict(report.config),
        "features": [
            {"name": fs.name,
             "distinct_count": fs.distinct,
             "q_config": fs.q_config}
            for fs in report.feature_scores
        ],
        "pairs": [
            {"x": ps.names[0],
             "y": ps.names[1],
             "q_corr": ps.q_corr,
             "q_cluster": ps.q_cluster,
             "q_outlier": ps.q_outlier,
             "q_ortho": ps.q_ortho,
             "diagnostics": dataclasses.asdict(ps.diagnostics)}
            for ps in report.pair_scores
        ],
        "aggregates": report.aggregates,
        "warnings": [dataclasses.asdict(w) for w in report.warnings],
        "version": report.version,
    }
    return _round(doc, precision)


def report_to_json(report: QualityReport, precision: int | str = 6) -> str:
    return json.dumps(report_to_dict(report, precision), indent=2)


_PAIR_COLUMNS = ("x", "y", "q_corr", "q_cluster", "q_outlier", "q_ortho",
                 "r", "v_dip", "p_dip", "nu_outlier", "ortho_center",
                 "ortho_e_in", "ortho_e_out")


def pair_table_csv(report: QualityReport, precision: int | str = 6) -> str:
    """Flat CSV table with one row per feature pair."""
    def fmt(v):
        if v is None:
            return ""
        if isinstance(v, float):
            return format(v, ".17g") if precision == "full" \
                else format(round(v, precision), "g")
        return str(v)

    buf = io.StringIO()
    buf.write(",".join(_PAIR_COLUMNS) + "\n")
    for ps in report.pair_scores:
        diag = ps.diagnostics
        row = (ps.names[0], ps.names[1], ps.q_corr, ps.q_cluster,
               ps.q_outlier, ps.q_ortho, diag.r, diag.v_dip, diag.p_dip,
               diag.nu_outlier, diag.ortho_center, diag.ortho_e_in,
               diag.ortho_e_out)
        buf.write(",".join(fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", name)


def write_plot_data(data: DataMatrix, directory) -> list[str]:
    """Write per-feature histogram data and per-pair scatter data.

    One-column text files ``hist__<feature>.txt`` and two-column files
    ``scatter__<x>__<y>.txt`` (raw values), intended for external plotting
    tools. Returns the list of paths written.
    """
    os.makedirs(directory, exist_ok=True)
    written = []
    for j, name in enumerate(data.column_names):
        path = os.path.join(directory, f"hist__{_safe_name(name)}.txt")
        np.savetxt(path, data.values[:, j], fmt="%.17g")
        written.append(path)
    p = data.n_cols
    for j in range(p):
        for l in range(j + 1, p):
            path = os.path.join(
                directory,
                f"scatter__{_safe_name(data.column_names[j])}"
                f"__{_safe_name(data.column_names[l])}.txt")
            np.savetxt(path, data.values[:, (j, l)], fmt="%.17g")
            written.append(path)
    return written
