"""The five data-quality scores and their aggregation over a feature table.

Every score lies in [0, 1]; values near 0 flag a defect:

* correlation  - redundancy between two features (1 - |r|)
* cluster      - multimodality of the pairwise-distance distribution of a
                 2-D projection, judged by the dip statistic and its p-value
* configuration- a feature taking few distinct values relative to the
                 richest feature
* outlier      - isolated points or small isolated groups, judged by the
                 ratio of the largest k-NN distance to its 0.9-quantile
* orthogonality- cross/L-shaped coverage where features only vary one at a
                 time, judged by in-band vs out-of-band spread

Thresholds enter through logistic calibrations whose slopes are derived
from boundary conditions (score 0.99 resp. 0.01 at the natural extremes),
so the tau parameters are the midpoints of the transitions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import DataMatrix, NormalizedView, normalize
from .dip import dip_pvalue, dip_statistic, _canonical_seed
from .stats import distinct_count, knn_distances, pairwise_distances, \
    pearson_r, quantile
from ._version import __version__

_LN99 = math.log(99.0)


@dataclass(frozen=True)
class CriterionConfig:
    """Tunable thresholds and seeds for all quality criteria.

    tau_cluster_1 : midpoint of the dip-value calibration (> 0)
    tau_cluster_2 : midpoint of the dip-p-value calibration, in (0, 1)
    tau_outlier   : k-NN distance ratio treated as borderline (> 1)
    tau_ortho     : half-width of the orthogonality band, in (0, 0.5)
    k_outlier     : neighbor rank; bounds the size of detectable outlier groups
    bootstrap_b   : bootstrap replicates behind the dip p-value
    seed          : master seed; every random substream derives from it
    ortho_grid_step : band-center grid step on the normalized scale
    distinct_tol  : merge tolerance for distinct-value counting (0 = exact)
    pairwise_cap  : point cap before the pairwise-distance multiset is built
    ortho_min_band : minimum points required on each side of the band
    spread        : "std" (default) or "mad" for the orthogonality spreads
    """

    tau_cluster_1: float = 0.025
    tau_cluster_2: float = 0.5
    tau_outlier: float = 4.0
    tau_ortho: float = 0.1
    k_outlier: int = 5
    bootstrap_b: int = 1000
    seed: int = 0
    ortho_grid_step: float = 0.01
    distinct_tol: float = 0.0
    pairwise_cap: int = 2000
    ortho_min_band: int = 5
    spread: str = "std"

    def __post_init__(self):
        if not self.tau_cluster_1 > 0:
            raise ValueError("tau_cluster_1 must be > 0")
        if not 0 < self.tau_cluster_2 < 1:
            raise ValueError("tau_cluster_2 must be in (0, 1)")
        if not self.tau_outlier > 1:
            raise ValueError("tau_outlier must be > 1")
        if not 0 < self.tau_ortho < 0.5:
            raise ValueError("tau_ortho must be in (0, 0.5)")
        if self.k_outlier < 1:
            raise ValueError("k_outlier must be >= 1")
        if self.bootstrap_b < 1:
            raise ValueError("bootstrap_b must be >= 1")
        if not self.ortho_grid_step > 0:
            raise ValueError("ortho_grid_step must be > 0")
        if self.distinct_tol < 0:
            raise ValueError("distinct_tol must be >= 0")
        if self.pairwise_cap < 2:
            raise ValueError("pairwise_cap must be >= 2")
        if self.ortho_min_band < 1:
            raise ValueError("ortho_min_band must be >= 1")
        if self.spread not in ("std", "mad"):
            raise ValueError("spread must be 'std' or 'mad'")


@dataclass(frozen=True)
class WarningRecord:
    """Structured degeneracy notice attached to a report."""

    code: str
    where: str
    message: str


@dataclass(frozen=True)
class FeatureScores:
    """Per-feature result: distinct-value count and configuration score."""

    index: int
    name: str
    distinct: int
    q_config: float


@dataclass(frozen=True)
class PairDiagnostics:
    """Raw quantities behind the pair scores (useful for inspection)."""

    r: float | None = None
    v_dip: float | None = None
    p_dip: float | None = None
    nu_outlier: float | None = None
    ortho_center: float | None = None
    ortho_e_in: float | None = None
    ortho_e_out: float | None = None
    ortho_band_axis: str | None = None


@dataclass(frozen=True)
class PairScores:
    """Scores of one unordered feature pair (2-D projection)."""

    pair: tuple[int, int]
    names: tuple[str, str]
    q_corr: float
    q_cluster: float
    q_outlier: float
    q_ortho: float
    diagnostics: PairDiagnostics


@dataclass(frozen=True)
class QualityReport:
    """Full assessment of one dataset: per-feature and per-pair scores,
    min/mean aggregates per criterion, warnings and the config echo."""

    dataset_name: str
    n_rows: int
    n_cols: int
    feature_scores: tuple[FeatureScores, ...]
    pair_scores: tuple[PairScores, ...]
    aggregates: dict
    warnings: tuple[WarningRecord, ...]
    config: CriterionConfig
    dropped_rows: int
    constant_columns: tuple[str, ...]
    version: str = __version__


# --------------------------------------------------------------------------
# scalar calibrations


def dip_value_score(v_dip: float, tau1: float) -> float:
    """Map a dip value to (0, 1): 0.99 at v=0, 0.5 at tau1, 0.01 at 2*tau1."""
    if not tau1 > 0:
        raise ValueError("tau1 must be > 0")
    a1 = _LN99 / tau1
    # t/(1+t) instead of 1 - 1/(1+t): stays strictly monotone in the tail
    t = math.exp(-a1 * (v_dip - tau1))
    return t / (1.0 + t)


def dip_pvalue_score(p_dip: float, tau2: float) -> float:
    """Map a dip p-value to (0, 1): 0.01 at p=0, 0.5 at tau2."""
    if not 0 < tau2 < 1:
        raise ValueError("tau2 must be in (0, 1)")
    a2 = _LN99 / tau2
    return 1.0 / (1.0 + math.exp(-a2 * (p_dip - tau2)))


def outlier_ratio_score(nu: float, tau: float) -> float:
    """Map the k-NN distance ratio to (0, 1): 0.99 at nu=1, 0.5 at tau."""
    if not tau > 1:
        raise ValueError("tau must be > 1")
    a3 = -_LN99 / (1.0 - tau)
    t = math.exp(-a3 * (nu - tau))
    return t / (1.0 + t)


def correlation_score(a, b) -> float:
    """1 - |pearson r|; 1.0 when the correlation is undefined."""
    r = pearson_r(a, b)
    if math.isnan(r):
        return 1.0
    return 1.0 - abs(r)


def configuration_scores(counts) -> np.ndarray:
    """Distinct-value counts scaled by their maximum (Eq.: c_j / max c_l).

    Uniformly few distinct values across all features (a designed
    experiment) score 1 everywhere; only a *relative* shortage flags.
    """
    c = np.asarray(counts, dtype=float).ravel()
    if c.size == 0 or np.any(c < 1):
        raise ValueError("counts must be positive")
    return c / c.max()


# --------------------------------------------------------------------------
# pair criteria on a normalized 2-D projection


@dataclass(frozen=True)
class ClusterOutcome:
    q: float
    v_dip: float | None
    p_dip: float | None
    warning: str | None = None


def cluster_score(points, cfg: CriterionConfig,
                  rng: np.random.Generator | None = None) -> ClusterOutcome:
    """Cluster criterion of a 2-D projection.

    Runs the dip test on the multiset of pairwise distances; the score is
    the more favorable of the dip-value and dip-p-value calibrations, so a
    borderline statistic needs a small p-value too before it flags.
    """
    pts = np.asarray(points, dtype=float)
    n = pts.shape[0]
    if n < 2:
        raise ValueError("need at least 2 points")
    if n == 2:
        # a single pairwise distance carries no modality evidence
        return ClusterOutcome(1.0, None, None, "degenerate_pair")
    d = pairwise_distances(pts, max_points=cfg.pairwise_cap, rng=rng)
    res = dip_statistic(d)
    p = dip_pvalue(res.v_dip, res.n, b=cfg.bootstrap_b, seed=cfg.seed)
    q = max(dip_value_score(res.v_dip, cfg.tau_cluster_1),
            dip_pvalue_score(p, cfg.tau_cluster_2))
    return ClusterOutcome(q, res.v_dip, p)


@dataclass(frozen=True)
class OutlierOutcome:
    q: float
    nu: float | None
    k_used: int
    warning: str | None = None


def outlier_score(points, cfg: CriterionConfig) -> OutlierOutcome:
    """Outlier criterion of a 2-D projection.

    nu = max(d_kNN) / quantile_0.9(d_kNN). A 0.9-quantile of zero means at
    least 90% of the points are duplicated; that degenerate case scores 0
    with a warning instead of dividing by zero.
    """
    pts = np.asarray(points, dtype=float)
    n = pts.shape[0]
    if n < 2:
        raise ValueError("need at least 2 points")
    warning = None
    k = cfg.k_outlier
    if k > n - 1:
        k = n - 1
        warning = "k_reduced"
    d = knn_distances(pts, k)
    d09 = quantile(d, 0.9)
    if d09 == 0.0:
        return OutlierOutcome(0.0, None, k, "duplicate_degeneracy")
    nu = float(d.max() / d09)
    return OutlierOutcome(outlier_ratio_score(nu, cfg.tau_outlier), nu, k,
                          warning)


@dataclass(frozen=True)
class OrthoOutcome:
    q: float
    center: float | None
    e_in: float | None
    e_out: float | None
    band_axis: str | None
    warning: str | None = None


def _spread(x: np.ndarray, method: str) -> float:
    if method == "mad":
        return float(np.abs(x - x.mean()).mean())
    return float(np.std(x))


def _band_centers(cfg: CriterionConfig) -> np.ndarray:
    lo = cfg.tau_ortho
    hi = 1.0 - cfg.tau_ortho
    count = int(math.floor((hi - lo) / cfg.ortho_grid_step + 1e-9)) + 1
    return lo + cfg.ortho_grid_step * np.arange(count)


def orthogonality_score(points, cfg: CriterionConfig) -> OrthoOutcome:
    """Orthogonality criterion of a normalized 2-D projection.

    For each candidate band center c the points are split by whether the
    banding coordinate lies in [c - tau, c + tau]; the score is the worst
    (smallest) ratio of out-of-band to in-band spread of the other
    coordinate, clamped to 1, over both orientations. Bands leaving fewer
    than ``ortho_min_band`` points on either side are skipped; if no band
    is valid at all the score is 1 with a warning.
    """
    pts = np.asarray(points, dtype=float)
    n = pts.shape[0]
    if n < 2:
        raise ValueError("need at least 2 points")
    centers = _band_centers(cfg)
    best_q = None
    best = (None, None, None, None)
    for axis in (0, 1):
        xl = pts[:, axis]        # banding coordinate
        xj = pts[:, 1 - axis]    # coordinate whose spread is compared
        for c in centers:
            mask = (xl >= c - cfg.tau_ortho) & (xl <= c + cfg.tau_ortho)
            n_in = int(mask.sum())
            if n_in < cfg.ortho_min_band or n - n_in < cfg.ortho_min_band:
                continue
            e_in = _spread(xj[mask], cfg.spread)
            e_out = _spread(xj[~mask], cfg.spread)
            ratio = 1.0 if e_in == 0.0 else min(1.0, e_out / e_in)
            if best_q is None or ratio < best_q:
                best_q = ratio
                best = (float(c), e_in, e_out, "x2" if axis == 1 else "x1")
    if best_q is None:
        return OrthoOutcome(1.0, None, None, None, None, "no_valid_band")
    return OrthoOutcome(best_q, *best)


# --------------------------------------------------------------------------
# dataset-level aggregation


def _pair_rng(cfg: CriterionConfig, j: int, l: int) -> np.random.Generator:
    return np.random.default_rng((_canonical_seed(cfg.seed), j, l))


def _agg(values: list[float]) -> dict | None:
    if not values:
        return None
    return {"min": float(min(values)),
            "mean": float(sum(values) / len(values))}


def assess(data: DataMatrix,
           cfg: CriterionConfig | None = None,
           *,
           dataset_name: str = "dataset") -> QualityReport:
    """Compute all quality scores of a feature table.

    Feature scores come from distinct-value counts on the raw columns;
    pair scores are evaluated on the min-max normalized projections for
    every unordered pair of non-constant columns. Constant columns are
    excluded from pair criteria (each one gets a warning) but still enter
    the configuration score with a count of 1.

    The result is deterministic given (data, cfg): all random substreams
    derive from ``cfg.seed``.
    """
    if cfg is None:
        cfg = CriterionConfig()
    norm = normalize(data)
    warnings: list[WarningRecord] = []
    names = data.column_names
    p = data.n_cols

    if data.dropped_rows:
        warnings.append(WarningRecord(
            "dropped_rows", "dataset",
            f"{data.dropped_rows} input rows dropped during ingestion"))
    for j in sorted(norm.constant_columns):
        warnings.append(WarningRecord(
            "constant_column", names[j],
            f"column {names[j]!r} is constant; excluded from pair criteria"))

    counts = [distinct_count(data.values[:, j], cfg.distinct_tol)
              for j in range(p)]
    q_config = configuration_scores(counts)
    features = tuple(
        FeatureScores(j, names[j], counts[j], float(q_config[j]))
        for j in range(p))

    active = [j for j in range(p) if j not in norm.constant_columns]
    pairs: list[PairScores] = []
    for a_pos in range(len(active)):
        for b_pos in range(a_pos + 1, len(active)):
            j, l = active[a_pos], active[b_pos]
            where = f"{names[j]}~{names[l]}"
            r = pearson_r(data.values[:, j], data.values[:, l])
            if math.isnan(r):
                q_corr = 1.0
                warnings.append(WarningRecord(
                    "undefined_correlation", where,
                    "zero variance; correlation undefined, scored 1.0"))
                r_diag = None
            else:
                q_corr = 1.0 - abs(r)
                r_diag = float(r)

            pts = norm.values[:, (j, l)]
            clu = cluster_score(pts, cfg, rng=_pair_rng(cfg, j, l))
            if clu.warning:
                warnings.append(WarningRecord(
                    clu.warning, where,
                    "single pairwise distance; cluster criterion skipped"))
            out = outlier_score(pts, cfg)
            if out.warning == "k_reduced":
                warnings.append(WarningRecord(
                    "k_reduced", where,
                    f"k_outlier reduced to {out.k_used} (only {data.n_rows} points)"))
            elif out.warning:
                warnings.append(WarningRecord(
                    out.warning, where,
                    "0.9-quantile of k-NN distances is zero (mass duplicates)"))
            ortho = orthogonality_score(pts, cfg)
            if ortho.warning:
                warnings.append(WarningRecord(
                    ortho.warning, where,
                    "no band center with enough points on both sides"))

            pairs.append(PairScores(
                pair=(j, l),
                names=(names[j], names[l]),
                q_corr=float(q_corr),
                q_cluster=float(clu.q),
                q_outlier=float(out.q),
                q_ortho=float(ortho.q),
                diagnostics=PairDiagnostics(
                    r=r_diag,
                    v_dip=clu.v_dip,
                    p_dip=clu.p_dip,
                    nu_outlier=out.nu,
                    ortho_center=ortho.center,
                    ortho_e_in=ortho.e_in,
                    ortho_e_out=ortho.e_out,
                    ortho_band_axis=ortho.band_axis,
                )))

    aggregates = {
        "q_corr": _agg([ps.q_corr for ps in pairs]),
        "q_cluster": _agg([ps.q_cluster for ps in pairs]),
        "q_outlier": _agg([ps.q_outlier for ps in pairs]),
        "q_ortho": _agg([ps.q_ortho for ps in pairs]),
        "q_config": _agg([fs.q_config for fs in features]),
    }
    return QualityReport(
        dataset_name=dataset_name,
        n_rows=data.n_rows,
        n_cols=p,
        feature_scores=features,
        pair_scores=tuple(pairs),
        aggregates=aggregates,
        warnings=tuple(warnings),
        config=cfg,
        dropped_rows=data.dropped_rows,
        constant_columns=tuple(names[j] for j in sorted(norm.constant_columns)),
    )
