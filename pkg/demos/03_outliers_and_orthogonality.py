"""Leverage points and one-factor-at-a-time coverage.

Two criteria that look at the *shape* of a 2-D projection:

* the outlier score compares the largest k-NN distance to its
  0.9-quantile -- a small isolated group inflates the ratio;
* the orthogonality score hunts for a band of one feature inside which
  the other feature varies, while outside it collapses -- the signature
  of data where only one factor was varied at a time.
"""

import numpy as np

from regqa import (CriterionConfig, normalize, DataMatrix, orthogonality_score,
                   outlier_score)

cfg = CriterionConfig(seed=3, bootstrap_b=100)
rng = np.random.default_rng(3)
n = 600


def norm_points(xy):
    return normalize(DataMatrix(xy, ("x1", "x2"))).values


# --- outliers -------------------------------------------------------------
clean = rng.random((n, 2))
out = outlier_score(norm_points(clean), cfg)
print(f"clean cloud:      nu={out.nu:5.2f}  q_outlier={out.q:.3f}")

spiked = np.vstack([rng.random((n - 3, 2)) * 0.3, 1.6 + 0.01 * rng.random((3, 2))])
out = outlier_score(norm_points(spiked), cfg)
print(f"blob + far trio:  nu={out.nu:5.2f}  q_outlier={out.q:.3f}")

# the k parameter bounds the size of a group that still counts as outliers:
# with k=2 a trio hides two of its members among themselves
out = outlier_score(norm_points(spiked), CriterionConfig(seed=3, k_outlier=2))
print(f"same, k=2:        nu={out.nu:5.2f}  q_outlier={out.q:.3f} "
      f"(group shelters itself)")

# --- orthogonality --------------------------------------------------------
print()
full = rng.random((n, 2))
res = orthogonality_score(norm_points(full), cfg)
print(f"full coverage:    q_ortho={res.q:.3f}")

half = n // 2
l_shape = np.vstack([
    np.column_stack([rng.random(half), 0.03 + 0.04 * rng.random(half)]),
    np.column_stack([0.03 + 0.04 * rng.random(n - half), rng.random(n - half)]),
])
res = orthogonality_score(norm_points(l_shape), cfg)
print(f"L-shaped arms:    q_ortho={res.q:.3f}  "
      f"(band on {res.band_axis} at {res.center:.2f}: "
      f"in-band spread {res.e_in:.3f} vs out-of-band {res.e_out:.3f})")

print("\nthe L covers both histograms completely, yet the joint space is")
print("almost empty away from the axes -- that is what the score flags.")
