"""rankbench: rank stochastic algorithms from mean/std benchmark matrices.

Core pipeline: load a pair of CSV matrices (means, standard deviations),
score each algorithm with the two-stage closeness ranking, optionally sweep
the mean-vs-std weight, compare against the Hellinger-distance baseline and
validate with Friedman + exact Wilcoxon tests.
"""

from .atopsis import (
    ClosenessMatrix,
    GlobalRanking,
    SweepReport,
    atopsis_rank,
    default_grid,
    global_stage,
    stage_one,
    weight_sweep,
)
from .core import (
    CriterionDirection,
    CriterionWeights,
    DecisionMatrixPair,
    LabeledMatrix,
    NormalizationScheme,
    WeightPair,
    apply_weights,
    load_matrix_pair,
    normalize,
    parse_matrix_csv,
)
from .errors import (
    AllZeroDifferences,
    BadGrid,
    BadValue,
    EmptyMatrix,
    LengthMismatch,
    NonPositiveSigma,
    NonPositiveSigmaFloor,
    RankbenchError,
    ShapeMismatch,
    TooFewAlgorithms,
    TooFewBenchmarks,
    WeightInvalid,
)
from .fixtures import load_case
from .hellinger import (
    DEFAULT_SIGMA_FLOOR,
    GaussianSummary,
    hellinger_distance,
    hellinger_topsis_rank,
)
from .stats import (
    FriedmanResult,
    StatsReport,
    WilcoxonResult,
    friedman_test,
    pairwise_wilcoxon,
    wilcoxon_signed_rank,
)
from .topsis import (
    ClosenessVector,
    IdealPair,
    SeparationPair,
    closeness,
    ideal_solutions,
    separation_distances,
    topsis_rank,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroDifferences",
    "BadGrid",
    "BadValue",
    "ClosenessMatrix",
    "ClosenessVector",
    "CriterionDirection",
    "CriterionWeights",
    "DecisionMatrixPair",
    "DEFAULT_SIGMA_FLOOR",
    "EmptyMatrix",
    "FriedmanResult",
    "GaussianSummary",
    "GlobalRanking",
    "IdealPair",
    "LabeledMatrix",
    "LengthMismatch",
    "NonPositiveSigma",
    "NonPositiveSigmaFloor",
    "NormalizationScheme",
    "RankbenchError",
    "SeparationPair",
    "ShapeMismatch",
    "StatsReport",
    "SweepReport",
    "TooFewAlgorithms",
    "TooFewBenchmarks",
    "WeightInvalid",
    "WeightPair",
    "WilcoxonResult",
    "apply_weights",
    "atopsis_rank",
    "closeness",
    "default_grid",
    "friedman_test",
    "global_stage",
    "hellinger_distance",
    "hellinger_topsis_rank",
    "ideal_solutions",
    "load_case",
    "load_matrix_pair",
    "normalize",
    "pairwise_wilcoxon",
    "parse_matrix_csv",
    "separation_distances",
    "stage_one",
    "topsis_rank",
    "weight_sweep",
    "wilcoxon_signed_rank",
]
