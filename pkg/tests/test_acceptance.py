"""End-to-end acceptance gate.

Each test covers one release criterion and prints one pass/fail line per
check, so a bare ``pytest tests/test_acceptance.py -v -s`` doubles as the
reproduction protocol:

1. benchmark score matrix, saturated cells (+-0.05, 20-seed means)
2. benchmark score matrix, geometry-dependent cells (+-0.25)
3. pathology separation (designated criterion low, all others high)
4. dip statistic vs. brute-force oracle, and hard bounds under fuzzing
5. logistic calibration boundary identities (1e-12)
6. property suites (ranges, invariances, determinism)
7. degenerate-input behavior (warnings instead of crashes)
"""

import json
import time

import numpy as np
import pytest

from dip_oracle import dip_oracle
from regqa import (BENCHMARK_KINDS, BenchmarkSpec, CriterionConfig,
                   DataMatrix, assess, dip_pvalue_score, dip_statistic,
                   dip_value_score, generate, knn_distances,
                   outlier_ratio_score, pairwise_distances, pearson_r,
                   report_to_json)

N_SEEDS = 20
SWEEP_CONFIG = CriterionConfig(seed=7)  # defaults otherwise

# Reference pair/feature score matrix: criterion -> (reported, tolerance).
# Tight cells are threshold-saturated; the 0.25 bands mark cells that
# depend on unpublished generator geometry.
REFERENCE = {
    "completeness": {"q_corr": (0.99, 0.05), "q_cluster": (0.99, 0.05),
                     "q_config": (1.00, 0.05), "q_outlier": (0.98, 0.05),
                     "q_ortho": (1.00, 0.05)},
    "correlation": {"q_corr": (0.00, 0.05), "q_cluster": (0.99, 0.05),
                    "q_config": (1.00, 0.05), "q_outlier": (0.94, 0.05),
                    "q_ortho": (1.00, 0.05)},
    "clusters": {"q_corr": (0.98, 0.05), "q_cluster": (0.01, 0.05),
                 "q_config": (1.00, 0.05), "q_outlier": (0.63, 0.25),
                 "q_ortho": (1.00, 0.05)},
    "configuration": {"q_corr": (0.94, 0.05), "q_cluster": (0.03, 0.05),
                      "q_config": (0.00, 0.05), "q_outlier": (0.96, 0.05),
                      "q_ortho": (1.00, 0.05)},
    "outliers": {"q_corr": (0.49, 0.25), "q_cluster": (0.98, 0.05),
                 "q_config": (1.00, 0.05), "q_outlier": (0.00, 0.05),
                 "q_ortho": (0.73, 0.25)},
    "orthogonality": {"q_corr": (0.39, 0.25), "q_cluster": (0.99, 0.05),
                      "q_config": (1.00, 0.05), "q_outlier": (0.97, 0.05),
                      "q_ortho": (0.01, 0.05)},
}
CRITERIA = ("q_corr", "q_cluster", "q_config", "q_outlier", "q_ortho")

# per-benchmark designated criterion (completeness is the control)
DESIGNATED = {"correlation": "q_corr", "clusters": "q_cluster",
              "configuration": "q_config", "outliers": "q_outlier",
              "orthogonality": "q_ortho"}
# reference cells below 0.6 plus the one expected cross-detection that is
# allowed to dip: outliers near clusters
SEPARATION_EXEMPT = {("configuration", "q_cluster"), ("outliers", "q_corr"),
                     ("orthogonality", "q_corr"), ("clusters", "q_outlier")}


@pytest.fixture(scope="session")
def sweep():
    """20-seed benchmark sweep with the default configuration."""
    t0 = time.perf_counter()
    means = {}
    for kind in BENCHMARK_KINDS:
        acc = {c: [] for c in CRITERIA}
        for seed in range(N_SEEDS):
            rep = assess(generate(BenchmarkSpec(kind=kind, n=1000, seed=seed)),
                         SWEEP_CONFIG, dataset_name=kind)
            for c in CRITERIA:
                acc[c].append(rep.aggregates[c]["min"])
        means[kind] = {c: float(np.mean(v)) for c, v in acc.items()}
    elapsed = time.perf_counter() - t0
    return means, elapsed


def test_criterion_1_saturated_reference_cells(sweep):
    means, elapsed = sweep
    failures = []
    for kind in BENCHMARK_KINDS:
        for crit in CRITERIA:
            expected, tol = REFERENCE[kind][crit]
            if tol > 0.05:
                continue  # loose cells are criterion 2
            got = means[kind][crit]
            ok = abs(got - expected) <= tol
            print(f"[{'PASS' if ok else 'FAIL'}] {kind:<14} {crit:<10} "
                  f"mean={got:.3f} expected {expected:.2f}±{tol:.2f}")
            if not ok:
                failures.append(f"{kind}.{crit}: {got:.3f} vs "
                                f"{expected:.2f}±{tol:.2f}")
    print(f"[INFO] sweep of {6 * N_SEEDS} assessments took {elapsed:.1f}s")
    assert elapsed < 60.0, f"sweep took {elapsed:.1f}s (budget 60s)"
    assert not failures, \
        "saturated cells out of tolerance: " + "; ".join(failures) + \
        " (the orthogonality score of clean data saturates near its" \
        " band-spread estimator noise floor, not at 1.0; see notes)"


def test_criterion_2_geometry_dependent_cells(sweep):
    means, _ = sweep
    for kind in BENCHMARK_KINDS:
        for crit in CRITERIA:
            expected, tol = REFERENCE[kind][crit]
            if tol <= 0.05:
                continue
            got = means[kind][crit]
            print(f"[{'PASS' if abs(got - expected) <= tol else 'FAIL'}] "
                  f"{kind:<14} {crit:<10} mean={got:.3f} "
                  f"expected {expected:.2f}±{tol:.2f}")
            assert abs(got - expected) <= tol, (kind, crit, got)


def test_criterion_3_pathology_separation(sweep):
    means, _ = sweep
    for kind, crit in DESIGNATED.items():
        got = means[kind][crit]
        print(f"[{'PASS' if got < 0.1 else 'FAIL'}] {kind:<14} designated "
              f"{crit} = {got:.3f} < 0.1")
        assert got < 0.1, (kind, crit, got)
    for kind in BENCHMARK_KINDS:
        for crit in CRITERIA:
            if DESIGNATED.get(kind) == crit:
                continue
            if REFERENCE[kind][crit][0] < 0.6:
                continue  # flagged low in the reference matrix
            if (kind, crit) in SEPARATION_EXEMPT:
                continue
            got = means[kind][crit]
            assert got > 0.6, (kind, crit, got)
    print("[PASS] all non-flagged criteria stay above 0.6")


def test_criterion_4_dip_oracle_and_bounds():
    rng = np.random.default_rng(42)
    worst = 0.0
    for trial in range(200):
        n = int(rng.integers(2, 13))
        if trial % 3 == 0:
            sample = rng.integers(0, 5, n).astype(float)
        elif trial % 3 == 1:
            sample = np.round(rng.random(n), 2)
        else:
            sample = rng.normal(size=n)
        worst = max(worst, abs(dip_statistic(sample).v_dip -
                               dip_oracle(sample)))
    print(f"[PASS] oracle agreement on 200 samples, worst |diff| = {worst:.2e}")
    assert worst <= 1e-9

    rng = np.random.default_rng(4242)
    for _ in range(10_000):
        n = int(rng.integers(2, 50))
        kind = rng.integers(0, 3)
        if kind == 0:
            sample = rng.normal(size=n)
        elif kind == 1:
            sample = rng.integers(-4, 5, n).astype(float)
        else:
            sample = rng.random(n) ** 3
        v = dip_statistic(sample).v_dip
        assert 0.5 / n - 1e-15 <= v <= 0.25 + 1e-15
    print("[PASS] dip bounds held on 10000 fuzzed samples")


def test_criterion_5_calibration_identities():
    checks = [
        ("dip value score at 0", dip_value_score(0.0, 0.025), 0.99),
        ("dip value score midpoint", dip_value_score(0.025, 0.025), 0.5),
        ("dip value score at 2*tau", dip_value_score(0.05, 0.025), 0.01),
        ("dip p-value score at 0", dip_pvalue_score(0.0, 0.5), 0.01),
        ("dip p-value score midpoint", dip_pvalue_score(0.5, 0.5), 0.5),
        ("dip p-value score at 1", dip_pvalue_score(1.0, 0.5), 0.99),
        ("outlier score at ratio 1", outlier_ratio_score(1.0, 4.0), 0.99),
        ("outlier score midpoint", outlier_ratio_score(4.0, 4.0), 0.5),
    ]
    for name, got, expected in checks:
        ok = abs(got - expected) <= 1e-12
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {got!r}")
        assert ok, (name, got, expected)


def test_criterion_6_property_suites():
    rng = np.random.default_rng(99)
    fast = CriterionConfig(bootstrap_b=50, seed=3)

    # scores stay in [0, 1] under fuzzing, duplicates and constants included
    for trial in range(25):
        n = int(rng.integers(5, 80))
        p = int(rng.integers(1, 5))
        vals = rng.normal(size=(n, p)) * rng.uniform(0.1, 50)
        if trial % 4 == 0:
            vals[: max(1, n // 2)] = vals[0]
        if trial % 5 == 0:
            vals[:, 0] = 1.234
        rep = assess(DataMatrix(vals, tuple(f"c{i}" for i in range(p))), fast)
        scores = [f.q_config for f in rep.feature_scores]
        for ps in rep.pair_scores:
            scores += [ps.q_corr, ps.q_cluster, ps.q_outlier, ps.q_ortho]
        assert all(0.0 <= s <= 1.0 for s in scores)
    print("[PASS] score range under fuzzing")

    # correlation score: symmetry exactly, affine invariance to 1e-12
    for _ in range(25):
        a = rng.normal(size=30)
        b = rng.normal(size=30)
        r = pearson_r(a, b)
        assert pearson_r(b, a) == r
        assert abs(abs(pearson_r(1.7 * a - 4.0, b)) - abs(r)) <= 1e-12
    print("[PASS] correlation symmetry and affine invariance")

    # dip: bit-exact affine invariance on dyadic samples
    for _ in range(25):
        n = int(rng.integers(5, 50))
        x = rng.integers(0, 2 ** 20, n) * 2.0 ** -20
        v = dip_statistic(x).v_dip
        for alpha in (0.5, 3.0):
            for beta in (-1.0, 10.0):
                assert dip_statistic(alpha * x + beta).v_dip == v
    print("[PASS] dip affine invariance (bit-exact)")

    # distances: isometry invariance to 1e-9
    pts = rng.random((80, 2))
    theta = 1.1
    rot = np.array([[np.cos(theta), -np.sin(theta)],
                    [np.sin(theta), np.cos(theta)]])
    moved = pts @ rot.T + np.array([-2.0, 5.0])
    assert np.all(np.abs(pairwise_distances(pts) -
                         pairwise_distances(moved)) <= 1e-9)
    assert np.all(np.abs(knn_distances(pts, 5) -
                         knn_distances(moved, 5)) <= 1e-9)
    print("[PASS] distance isometry invariance")

    # identical reports, byte for byte, for a fixed seed
    m = DataMatrix(rng.random((150, 3)), ("a", "b", "c"))
    cfg = CriterionConfig(bootstrap_b=200, seed=11)
    assert report_to_json(assess(m, cfg)) == report_to_json(assess(m, cfg))
    print("[PASS] report determinism under fixed seed")


def test_criterion_7_degenerate_inputs():
    fast = CriterionConfig(bootstrap_b=50, seed=3)

    def check(rep, label, expect_warning):
        scores = [f.q_config for f in rep.feature_scores]
        for ps in rep.pair_scores:
            scores += [ps.q_corr, ps.q_cluster, ps.q_outlier, ps.q_ortho]
        assert all(0.0 <= s <= 1.0 for s in scores), label
        if expect_warning:
            assert rep.warnings, f"{label}: expected a warning"
        print(f"[PASS] {label}: {len(rep.warnings)} warning(s), "
              f"{len(rep.pair_scores)} pair(s)")

    rng = np.random.default_rng(17)
    const = np.column_stack([np.full(30, 2.0), rng.random(30)])
    check(assess(DataMatrix(const, ("c", "x")), fast),
          "constant column", True)

    dup = np.tile([1.0, 2.0, 3.0], (10, 1))
    check(assess(DataMatrix(dup, ("a", "b", "c")), fast),
          "all rows identical", True)

    two = np.array([[0.0, 1.0], [1.0, 0.0]])
    check(assess(DataMatrix(two, ("a", "b")), fast), "two rows", True)

    single = DataMatrix(rng.random((40, 1)), ("only",))
    check(assess(single, fast), "single column", False)

    ninety = np.vstack([np.tile([0.3, 0.7], (28, 1)), rng.random((2, 2))])
    rep = assess(DataMatrix(ninety, ("a", "b")), fast)
    assert any(w.code == "duplicate_degeneracy" for w in rep.warnings)
    check(rep, "mass duplicates", True)
