"""Two-stage ranking over a mean/std matrix pair, plus the weight sweep.

Stage 1 scores every algorithm twice with standard TOPSIS: once on the mean
matrix (direction chosen by the caller) and once on the std matrix, where
lower dispersion is always better.  Stage 2 runs TOPSIS again on the
resulting m x 2 closeness matrix, its columns scaled by the mean/std weights,
and sorts by the global closeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    CriterionDirection,
    CriterionWeights,
    DecisionMatrixPair,
    NormalizationScheme,
    WeightPair,
)
from .errors import BadGrid, WeightInvalid
from .topsis import topsis_rank

DEFAULT_TIE_EPSILON = 1e-9
DEFAULT_SWEEP_W_MU = (0.5, 0.6, 0.7, 0.8, 0.9, 1.0)


@dataclass(frozen=True)
class ClosenessMatrix:
    """Stage-1 output: one closeness score per algorithm for means and for stds."""

    labels: tuple[str, ...]
    xi_mu: np.ndarray
    xi_sigma: np.ndarray

    def __post_init__(self):
        if len(self.xi_mu) != len(self.labels) or len(self.xi_sigma) != len(self.labels):
            raise WeightInvalid("closeness vectors must align with labels")


@dataclass(frozen=True)
class GlobalRanking:
    """Global closeness per algorithm, the descending order, and tie groups."""

    labels: tuple[str, ...]          # input row order
    xi_global: np.ndarray            # aligned with labels
    order: tuple[str, ...]           # descending by xi_global
    tie_groups: tuple[tuple[str, ...], ...]
    tie_epsilon: float

    def xi_of(self, label: str) -> float:
        return float(self.xi_global[self.labels.index(label)])

    def position(self, label: str) -> int:
        """1-based position in the order."""
        return self.order.index(label) + 1

    def as_dict(self) -> dict[str, float]:
        return {name: float(v) for name, v in zip(self.labels, self.xi_global)}


@dataclass(frozen=True)
class SweepReport:
    """One ranking per weight grid point plus the first stable grid index."""

    grid: tuple[WeightPair, ...]
    rankings: tuple[GlobalRanking, ...]
    stability_index: int | None

    @property
    def stability_w_mu(self) -> float | None:
        if self.stability_index is None:
            return None
        return self.grid[self.stability_index].w_mu


def _sort_and_group(labels, xi, tie_epsilon):
    order_idx = sorted(range(len(labels)), key=lambda i: (-xi[i], i))
    order = tuple(labels[i] for i in order_idx)
    groups = []
    current = []
    group_top = None
    for i in order_idx:
        if current and group_top - xi[i] > tie_epsilon:
            groups.append(tuple(current))
            current = []
        if not current:
            group_top = xi[i]
        current.append(labels[i])
    if current:
        groups.append(tuple(current))
    return order, tuple(groups)


def global_stage(
    closeness: ClosenessMatrix,
    weights: WeightPair,
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
) -> GlobalRanking:
    """Stage 2: TOPSIS over the weighted m x 2 closeness matrix.

    The weighted columns are used as-is (no re-normalization); both count as
    benefit, since each closeness score already means higher-is-better.
    """
    if not isinstance(weights, WeightPair):
        weights = WeightPair(*weights)
    c = np.column_stack([closeness.xi_mu, closeness.xi_sigma])
    weighted = c * np.array([weights.w_mu, weights.w_sigma])
    positive = weighted.max(axis=0)
    negative = weighted.min(axis=0)
    d_plus = np.sqrt(((weighted - positive) ** 2).sum(axis=1))
    d_minus = np.sqrt(((weighted - negative) ** 2).sum(axis=1))
    total = d_plus + d_minus
    xi_g = np.where(total == 0.0, 0.5, d_minus / np.where(total == 0.0, 1.0, total))
    order, groups = _sort_and_group(closeness.labels, xi_g, tie_epsilon)
    return GlobalRanking(
        labels=closeness.labels,
        xi_global=xi_g,
        order=order,
        tie_groups=groups,
        tie_epsilon=tie_epsilon,
    )


def stage_one(
    pair: DecisionMatrixPair,
    mean_direction: CriterionDirection,
    scheme: NormalizationScheme,
    inner_weights: CriterionWeights | None = None,
) -> ClosenessMatrix:
    """Run standard TOPSIS on the mean and std matrices separately.

    Std columns are always cost: lower variability is preferable.  Inner
    criterion weights default to uniform.
    """
    n = pair.mu.shape[1]
    w = inner_weights if inner_weights is not None else CriterionWeights.uniform(n)
    xi_mu = topsis_rank(pair.mu, w, [mean_direction] * n, scheme)
    xi_sigma = topsis_rank(pair.sigma, w, [CriterionDirection.COST] * n, scheme)
    return ClosenessMatrix(labels=pair.row_labels, xi_mu=xi_mu.xi, xi_sigma=xi_sigma.xi)


def atopsis_rank(
    pair: DecisionMatrixPair,
    weights: WeightPair,
    mean_direction: CriterionDirection = CriterionDirection.BENEFIT,
    scheme: NormalizationScheme = NormalizationScheme.MAX,
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
    inner_weights: CriterionWeights | None = None,
) -> GlobalRanking:
    stage1 = stage_one(pair, mean_direction, scheme, inner_weights)
    return global_stage(stage1, weights, tie_epsilon)


def default_grid() -> tuple[WeightPair, ...]:
    return tuple(WeightPair.from_w_mu(w) for w in DEFAULT_SWEEP_W_MU)


def _stability_index(orders: Sequence[tuple[str, ...]]) -> int | None:
    """Start of the maximal suffix of identical orders; None when only the
    final point itself is stable (grid of one counts as stable at 0)."""
    k = len(orders)
    start = k - 1
    while start > 0 and orders[start - 1] == orders[k - 1]:
        start -= 1
    if start == k - 1 and k > 1:
        return None
    return start


def weight_sweep(
    pair: DecisionMatrixPair,
    grid: Sequence[WeightPair] | None = None,
    mean_direction: CriterionDirection = CriterionDirection.BENEFIT,
    scheme: NormalizationScheme = NormalizationScheme.MAX,
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
    inner_weights: CriterionWeights | None = None,
) -> SweepReport:
    """Rank once per grid point; stage 1 is computed a single time."""
    pts = tuple(grid) if grid is not None else default_grid()
    if not pts:
        raise BadGrid("weight grid is empty")
    for p in pts:
        if not isinstance(p, WeightPair):
            raise BadGrid(f"grid entries must be WeightPair, got {type(p).__name__}")
    w_mus = [p.w_mu for p in pts]
    if any(b <= a for a, b in zip(w_mus, w_mus[1:])):
        raise BadGrid("grid must be strictly increasing in w_mu")
    stage1 = stage_one(pair, mean_direction, scheme, inner_weights)
    rankings = tuple(global_stage(stage1, p, tie_epsilon) for p in pts)
    return SweepReport(
        grid=pts,
        rankings=rankings,
        stability_index=_stability_index([r.order for r in rankings]),
    )
