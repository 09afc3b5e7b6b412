"""Reproduce the benchmark score matrix.

Six generated datasets isolate one defect each; assessing them yields a
6x5 matrix in which each row's designated criterion collapses toward 0
while the others stay high. Equivalent to ``regqa bench`` but using the
library API directly.
"""

import numpy as np

from regqa import BENCHMARK_KINDS, BenchmarkSpec, CriterionConfig, assess, \
    generate
from regqa.benchmarks import REFERENCE_SCORES

CRITERIA = ("q_corr", "q_cluster", "q_config", "q_outlier", "q_ortho")
DESIGNATED = {"correlation": "q_corr", "clusters": "q_cluster",
              "configuration": "q_config", "outliers": "q_outlier",
              "orthogonality": "q_ortho"}

cfg = CriterionConfig(seed=7)  # bootstrap_b=1000 default; takes ~30 s

print(f"{'dataset':<16}" + "".join(f"{c:>12}" for c in CRITERIA))
for kind in BENCHMARK_KINDS:
    data = generate(BenchmarkSpec(kind=kind, n=1000, seed=0))
    rep = assess(data, cfg, dataset_name=kind)
    cells = []
    for crit in CRITERIA:
        value = rep.aggregates[crit]["min"]
        mark = "*" if DESIGNATED.get(kind) == crit else " "
        cells.append(f"{value:11.2f}{mark}")
    print(f"{kind:<16}" + "".join(cells))

print("\n(* designated defect of that dataset; reference values below)")
print(f"{'dataset':<16}" + "".join(f"{c:>12}" for c in CRITERIA))
for kind in BENCHMARK_KINDS:
    row = "".join(f"{REFERENCE_SCORES[kind][c][0]:12.2f}" for c in CRITERIA)
    print(f"{kind:<16}" + row)

print("\nnote: the orthogonality score of defect-free data settles near")
print("0.93-0.95 rather than 1.0 at n=1000 -- it is a minimum over many")
print("noisy band-spread ratios, so its ceiling is set by estimator noise.")
