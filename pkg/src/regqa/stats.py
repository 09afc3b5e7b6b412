"""Statistical primitives used by the quality criteria.

All functions are pure and operate on plain numpy arrays. Distances are
Euclidean; the pair criteria only ever look at 2-D projections, so the
exhaustive O(N^2) neighbor search is deliberate (desk-scale N).
"""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import pdist


def pearson_r(a, b) -> float:
    """Sample Pearson correlation coefficient, clipped into [-1, 1].

    Returns ``nan`` when either vector has zero variance (the undefined
    case); callers treat that as "no correlation evidence".
    """
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    if a.size < 2:
        raise ValueError("need at least 2 observations")
    am = a - a.mean()
    bm = b - b.mean()
    denom = np.sqrt((am * am).sum() * (bm * bm).sum())
    if denom == 0.0:
        return float("nan")
    return float(np.clip((am * bm).sum() / denom, -1.0, 1.0))


def quantile(v, q: float) -> float:
    """Empirical quantile with linear interpolation on order statistics.

    Rank h = q*(n-1); result interpolates between the floor(h)-th and the
    next order statistic. Matches numpy's default 'linear' method; pinned
    here because the outlier ratio depends on the convention.
    """
    v = np.asarray(v, dtype=float).ravel()
    if v.size == 0:
        raise ValueError("empty vector")
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"quantile level {q} outside [0, 1]")
    return float(np.quantile(v, q))


def distinct_count(v, tol: float = 0.0) -> int:
    """Number of distinct values in ``v`` after merging near-ties.

    Sorted gaps larger than ``tol`` start a new equivalence class;
    ``tol=0`` counts exactly distinct values.
    """
    v = np.asarray(v, dtype=float).ravel()
    if v.size == 0:
        raise ValueError("empty vector")
    if tol < 0:
        raise ValueError("tol must be >= 0")
    s = np.sort(v)
    return int(1 + np.count_nonzero(np.diff(s) > tol))


def pairwise_distances(points,
                       *,
                       max_points: int | None = 2000,
                       rng: np.random.Generator | None = None) -> np.ndarray:
    """Euclidean distances of all unordered point pairs (upper triangle).

    When the point count exceeds ``max_points`` a uniform subsample of that
    size is drawn first (the distance multiset only feeds a distribution
    test, which subsampling preserves). The subsample requires ``rng`` so
    the reduction stays reproducible.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2:
        raise ValueError("points must be a 2-D array")
    n = pts.shape[0]
    if n < 2:
        raise ValueError("need at least 2 points")
    if max_points is not None and n > max_points:
        if rng is None:
            raise ValueError("subsampling requires an rng")
        idx = rng.choice(n, size=max_points, replace=False)
        pts = pts[np.sort(idx)]
    return pdist(pts)


def knn_distances(points, k: int) -> np.ndarray:
    """Distance of every point to its k-th nearest other point.

    Self-distances are excluded but exact duplicates of a point count as
    neighbors, so an entry can be 0 only when at least k duplicates exist.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2:
        raise ValueError("points must be a 2-D array")
    n = pts.shape[0]
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} must satisfy 1 <= k <= N-1={n - 1}")
    out = np.empty(n)
    chunk = max(1, min(n, 2 ** 21 // max(n, 1)))
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        # coordinate differences keep duplicate distances exactly zero
        d2 = np.zeros((stop - start, n))
        for dim in range(pts.shape[1]):
            diff = pts[start:stop, dim, None] - pts[None, :, dim]
            d2 += diff * diff
        # row i contains its own zero, so index k is the k-th other point
        out[start:stop] = np.sqrt(np.partition(d2, k, axis=1)[:, k])
    return out
