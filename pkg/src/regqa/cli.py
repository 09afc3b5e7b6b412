"""Command line interface: ``regqa assess|generate|bench``.

Exit codes: 0 success, 2 input error, 3 internal error. Errors are written
to stderr as one JSON object per failure so scripted callers can parse
them.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import benchmarks
from ._version import __version__
from .criteria import CriterionConfig, assess
from .dataset import InputDataError, ingest_csv, write_csv
from .report import pair_table_csv, report_to_json, write_plot_data

_CRITERIA = ("q_corr", "q_cluster", "q_config", "q_outlier", "q_ortho")


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    grp = parser.add_argument_group("criterion parameters")
    grp.add_argument("--seed", type=int, default=None,
                     help="master seed (default: $REGQA_SEED or 0)")
    grp.add_argument("--k", type=int, default=5, dest="k_outlier",
                     help="neighbor rank for the outlier criterion")
    grp.add_argument("--tau-cluster1", type=float, default=0.025)
    grp.add_argument("--tau-cluster2", type=float, default=0.5)
    grp.add_argument("--tau-outlier", type=float, default=4.0)
    grp.add_argument("--tau-ortho", type=float, default=0.1)
    grp.add_argument("--bootstrap", type=int, default=1000,
                     help="bootstrap replicates for the dip p-value")
    grp.add_argument("--distinct-tol", type=float, default=0.0)
    grp.add_argument("--spread", choices=("std", "mad"), default="std")


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("REGQA_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputDataError(f"REGQA_SEED is not an integer: {env!r}")
    return 0


def _config_from_args(args) -> CriterionConfig:
    return CriterionConfig(
        tau_cluster_1=args.tau_cluster1,
        tau_cluster_2=args.tau_cluster2,
        tau_outlier=args.tau_outlier,
        tau_ortho=args.tau_ortho,
        k_outlier=args.k_outlier,
        bootstrap_b=args.bootstrap,
        seed=_resolve_seed(args),
        distinct_tol=args.distinct_tol,
        spread=args.spread,
    )


def _precision(raw: str):
    if raw == "full":
        return "full"
    try:
        value = int(raw)
    except ValueError:
        raise InputDataError(f"--precision must be an integer or 'full', got {raw!r}")
    if value < 0:
        raise InputDataError("--precision must be >= 0")
    return value


def _cmd_assess(args) -> int:
    path = args.input or args.input_flag
    if path is None:
        raise InputDataError("no input file given (positional or --input)")
    cfg = _config_from_args(args)
    precision = _precision(args.precision)
    with open(path, "rb") as fh:
        ignore = tuple(args.ignore_column or ())
        data = ingest_csv(fh, delimiter=args.delimiter,
                          header=not args.no_header, ignore_columns=ignore)
    report = assess(data, cfg, dataset_name=os.path.basename(path))
    if args.format == "csv":
        payload = pair_table_csv(report, precision)
    else:
        payload = report_to_json(report, precision) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if args.plots:
        write_plot_data(data, args.plots)
    return 0


def _cmd_generate(args) -> int:
    spec = benchmarks.BenchmarkSpec(kind=args.kind, n=args.n,
                                    seed=_resolve_seed(args))
    data = benchmarks.generate(spec)
    write_csv(data, args.output)
    print(f"wrote {args.output}: kind={spec.kind} n={spec.n} seed={spec.seed}")
    return 0


def _score_row(report) -> dict:
    agg = report.aggregates
    return {
        "q_corr": agg["q_corr"]["min"],
        "q_cluster": agg["q_cluster"]["min"],
        "q_config": agg["q_config"]["min"],
        "q_outlier": agg["q_outlier"]["min"],
        "q_ortho": agg["q_ortho"]["min"],
    }


def _cmd_bench(args) -> int:
    cfg = _config_from_args(args)
    base_seed = _resolve_seed(args)
    reps = args.reps
    rows = {}
    for kind in benchmarks.BENCHMARK_KINDS:
        samples = {c: [] for c in _CRITERIA}
        for r in range(reps):
            spec = benchmarks.BenchmarkSpec(kind=kind, n=1000,
                                            seed=base_seed + r)
            report = assess(benchmarks.generate(spec), cfg, dataset_name=kind)
            for c, v in _score_row(report).items():
                samples[c].append(v)
        rows[kind] = {c: (float(np.mean(v)), float(np.std(v)))
                      for c, v in samples.items()}

    label = {"completeness": "a", "correlation": "b", "clusters": "c",
             "configuration": "d", "outliers": "e", "orthogonality": "f"}
    header = f"{'dataset':<18}" + "".join(f"{c:>16}" for c in _CRITERIA)
    print(header)
    print("-" * len(header))
    failures = 0
    for kind in benchmarks.BENCHMARK_KINDS:
        cells = []
        for c in _CRITERIA:
            mean, sd = rows[kind][c]
            expected, tol = benchmarks.REFERENCE_SCORES[kind][c]
            ok = abs(mean - expected) <= tol
            failures += 0 if ok else 1
            value = f"{mean:.2f}" if reps == 1 else f"{mean:.2f}±{sd:.2f}"
            cells.append(f"{value + (' ok' if ok else ' FAIL'):>16}")
        print(f"{label[kind]} {kind:<16}" + "".join(cells))
    print(f"\n{30 - failures}/30 cells within tolerance "
          f"(seed={base_seed}, reps={reps})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regqa",
        description="Quality scores for the input data of regression problems.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_assess = sub.add_parser(
        "assess", help="score a CSV dataset and emit a report")
    p_assess.add_argument("input", nargs="?", help="input CSV file")
    p_assess.add_argument("-i", "--input", dest="input_flag", metavar="PATH",
                          help="input CSV file (alternative to positional)")
    p_assess.add_argument("-o", "--output", help="write the report here")
    p_assess.add_argument("--format", choices=("json", "csv"), default="json")
    p_assess.add_argument("--plots", metavar="DIR",
                          help="write scatter/histogram plot data files")
    p_assess.add_argument("--delimiter", default=",")
    p_assess.add_argument("--no-header", action="store_true",
                          help="input has no header row")
    p_assess.add_argument("--ignore-column", action="append", metavar="NAME",
                          help="drop a named column (e.g. the target)")
    p_assess.add_argument("--precision", default="6",
                          help="report decimals, or 'full'")
    _add_config_flags(p_assess)
    p_assess.set_defaults(func=_cmd_assess)

    p_gen = sub.add_parser("generate", help="write a benchmark dataset CSV")
    p_gen.add_argument("--kind", required=True,
                       choices=benchmarks.BENCHMARK_KINDS)
    p_gen.add_argument("--n", type=int, default=1000)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("-o", "--output", required=True)
    p_gen.set_defaults(func=_cmd_generate)

    p_bench = sub.add_parser(
        "bench", help="reproduce the benchmark score matrix")
    p_bench.add_argument("--reps", type=int, default=1,
                         help="seeds per benchmark (mean±sd when > 1)")
    p_bench.add_argument("--precision", default="6")
    _add_config_flags(p_bench)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputDataError, FileNotFoundError, PermissionError) as exc:
        json.dump({"error": "input", "detail": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except ValueError as exc:
        json.dump({"error": "input", "detail": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except Exception as exc:  # internal invariant violation
        json.dump({"error": "internal", "detail": f"{type(exc).__name__}: {exc}"},
                  sys.stderr)
        sys.stderr.write("\n")
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
