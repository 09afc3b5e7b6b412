"""Score a small dataset end to end.

Builds a feature table with one deliberately redundant column, runs the
full assessment and walks through the report: per-feature configuration
scores, per-pair scores and the min/mean aggregates. Scores live in
[0, 1]; values near 0 flag a data-quality problem.
"""

import numpy as np

from regqa import CriterionConfig, DataMatrix, assess, report_to_json

rng = np.random.default_rng(7)
n = 400

# three features: pressure and temperature are independent, flow is
# almost a rescaled copy of pressure (a redundancy the correlation score
# should flag)
pressure = rng.uniform(0.8, 2.4, n)
temperature = rng.normal(55.0, 8.0, n)
flow = 3.1 * pressure + rng.normal(0.0, 0.02, n)

data = DataMatrix(np.column_stack([pressure, temperature, flow]),
                  ("pressure", "temperature", "flow"))

cfg = CriterionConfig(seed=1, bootstrap_b=500)
report = assess(data, cfg, dataset_name="process-demo")

print("feature scores (distinct-value configuration):")
for fs in report.feature_scores:
    print(f"  {fs.name:<12} distinct={fs.distinct:<5} q_config={fs.q_config:.3f}")

print("\npair scores (0 = defect):")
for ps in report.pair_scores:
    print(f"  {ps.names[0]:<12} ~ {ps.names[1]:<12} "
          f"corr={ps.q_corr:.3f} cluster={ps.q_cluster:.3f} "
          f"outlier={ps.q_outlier:.3f} ortho={ps.q_ortho:.3f}")

print("\nheadline aggregates (minima):")
for crit, agg in report.aggregates.items():
    if agg is not None:
        print(f"  {crit:<10} min={agg['min']:.3f} mean={agg['mean']:.3f}")

# the pressure~flow pair should stand out with q_corr near 0
worst = min(report.pair_scores, key=lambda ps: ps.q_corr)
print(f"\nmost redundant pair: {worst.names[0]} ~ {worst.names[1]} "
      f"(q_corr={worst.q_corr:.4f}, r={worst.diagnostics.r:.4f})")

# the same report, machine readable
print("\nJSON report head:")
print("\n".join(report_to_json(report).splitlines()[:14]))
