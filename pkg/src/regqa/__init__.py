"""Quality scores for the input data of regression problems.

The package quantifies five defect classes of a numeric feature table --
correlations, clusters, coarse configurations, outliers/leverage points
and orthogonality -- as scores in [0, 1] (0 = defect), per feature and
per feature pair, plus a benchmark generator and a small CLI (``regqa``).
"""

from ._version import __version__
from .benchmarks import BENCHMARK_KINDS, BenchmarkSpec, generate
from .criteria import (
    ClusterOutcome,
    CriterionConfig,
    FeatureScores,
    OrthoOutcome,
    OutlierOutcome,
    PairDiagnostics,
    PairScores,
    QualityReport,
    WarningRecord,
    assess,
    cluster_score,
    configuration_scores,
    correlation_score,
    dip_pvalue_score,
    dip_value_score,
    orthogonality_score,
    outlier_ratio_score,
    outlier_score,
)
from .dataset import (
    DataMatrix,
    InputDataError,
    NormalizedView,
    column,
    ingest_csv,
    normalize,
    write_csv,
)
from .dip import DipResult, dip_pvalue, dip_statistic, dip_test, null_dips
from .report import pair_table_csv, report_to_dict, report_to_json, \
    write_plot_data
from .stats import (
    distinct_count,
    knn_distances,
    pairwise_distances,
    pearson_r,
    quantile,
)

__all__ = [
    "__version__",
    "BENCHMARK_KINDS",
    "BenchmarkSpec",
    "ClusterOutcome",
    "CriterionConfig",
    "DataMatrix",
    "DipResult",
    "FeatureScores",
    "InputDataError",
    "NormalizedView",
    "OrthoOutcome",
    "OutlierOutcome",
    "PairDiagnostics",
    "PairScores",
    "QualityReport",
    "WarningRecord",
    "assess",
    "cluster_score",
    "column",
    "configuration_scores",
    "correlation_score",
    "dip_pvalue",
    "dip_pvalue_score",
    "dip_statistic",
    "dip_test",
    "dip_value_score",
    "distinct_count",
    "generate",
    "ingest_csv",
    "knn_distances",
    "normalize",
    "null_dips",
    "orthogonality_score",
    "outlier_ratio_score",
    "outlier_score",
    "pair_table_csv",
    "pairwise_distances",
    "pearson_r",
    "quantile",
    "report_to_dict",
    "report_to_json",
    "write_csv",
    "write_plot_data",
]
