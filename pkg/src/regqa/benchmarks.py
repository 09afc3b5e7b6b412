"""Seeded generators for six two-feature benchmark datasets.

Each dataset isolates one data-quality defect so the matching criterion
can be exercised (and regression-tested) in isolation:

* completeness  - i.i.d. uniform cover of the unit square (the control:
                  nothing should flag)
* correlation   - points on the diagonal with small orthogonal noise
* clusters      - two tight, well-separated Gaussian blobs
* configuration - one quasi-continuous feature vs. one with 3 levels
* outliers      - a uniform blob in a sub-square plus a tiny displaced group
* orthogonality - an L of axis-aligned arms hugging the coordinate axes

Apart from the displaced outlier group, generated values stay inside
[0, 1.1]; generation is bit-reproducible for a given spec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import DataMatrix

BENCHMARK_KINDS = ("completeness", "correlation", "clusters",
                   "configuration", "outliers", "orthogonality")


@dataclass(frozen=True)
class BenchmarkSpec:
    """Recipe for one benchmark dataset.

    Only the shape parameters relevant to ``kind`` are used; the defaults
    reproduce the reference score matrix (see the bench command).
    """

    kind: str
    n: int = 1000
    seed: int = 0
    line_noise: float = 0.01          # correlation: orthogonal noise sigma
    # a 2x2 grid keeps the features uncorrelated and both marginals bimodal;
    # sigma is far below the band-grid step so normalized clusters cannot be
    # partially clipped by an orthogonality band (two diagonal blobs would
    # correlate the features; wide blobs leave noisy band tails)
    cluster_centers: tuple = ((0.25, 0.25), (0.25, 0.75),
                              (0.75, 0.25), (0.75, 0.75))
    cluster_sigma: float = 0.0005
    levels: tuple = (0.0, 0.5, 1.0)   # configuration: the coarse feature
    blob_side: float = 0.25           # outliers: side of the blob sub-square
    outlier_count: int = 5
    outlier_factor: float = 3.7       # group offset in blob diagonals
    outlier_jitter: float = 0.08
    arm_width: float = 0.05           # orthogonality: full arm width
    arm_center: float = 0.05          # orthogonality: arm center offset

    def __post_init__(self):
        if self.kind not in BENCHMARK_KINDS:
            raise ValueError(
                f"unknown kind {self.kind!r}; expected one of {BENCHMARK_KINDS}")
        if self.n < 50:
            raise ValueError("n must be >= 50")


def _rng(spec: BenchmarkSpec) -> np.random.Generator:
    return np.random.default_rng(int(spec.seed) % (2 ** 63))


def generate(spec: BenchmarkSpec) -> DataMatrix:
    """Generate the dataset described by ``spec`` (always N x 2)."""
    rng = _rng(spec)
    n = spec.n
    if spec.kind == "completeness":
        xy = rng.random((n, 2))
    elif spec.kind == "correlation":
        t = rng.random(n)
        e = rng.normal(0.0, spec.line_noise, n) / math.sqrt(2.0)
        xy = np.clip(np.column_stack([t - e, t + e]), 0.0, 1.0)
    elif spec.kind == "clusters":
        k = len(spec.cluster_centers)
        sizes = [n // k] * k
        sizes[-1] += n - sum(sizes)
        parts = []
        for size, center in zip(sizes, spec.cluster_centers):
            parts.append(np.asarray(center, dtype=float) +
                         rng.normal(0.0, spec.cluster_sigma, (size, 2)))
        xy = np.clip(np.vstack(parts), 0.0, 1.0)
    elif spec.kind == "configuration":
        x1 = rng.random(n)
        x2 = rng.choice(np.asarray(spec.levels, dtype=float), size=n)
        xy = np.column_stack([x1, x2])
    elif spec.kind == "outliers":
        m = n - spec.outlier_count
        blob = rng.random((m, 2)) * spec.blob_side
        # group center sits outlier_factor blob-diagonals out along the diagonal
        offset = spec.blob_side / 2.0 + spec.outlier_factor * spec.blob_side
        group = offset + rng.normal(0.0, spec.outlier_jitter,
                                    (spec.outlier_count, 2))
        xy = np.vstack([blob, group])
    else:  # orthogonality
        half = n // 2
        along1 = rng.random(half)
        pin2 = spec.arm_center + rng.uniform(-spec.arm_width / 2.0,
                                             spec.arm_width / 2.0, half)
        along2 = rng.random(n - half)
        pin1 = spec.arm_center + rng.uniform(-spec.arm_width / 2.0,
                                             spec.arm_width / 2.0, n - half)
        xy = np.vstack([np.column_stack([along1, pin2]),
                        np.column_stack([pin1, along2])])
    return DataMatrix(xy, ("x1", "x2"))


# Reference score matrix the bench command prints its pass/fail against:
# kind -> criterion -> (reported value, tolerance). The loose 0.25 bands
# mark cells that depend on unpublished generator geometry.
REFERENCE_SCORES = {
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
