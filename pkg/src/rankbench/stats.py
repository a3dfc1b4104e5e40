"""Nonparametric validation: Friedman omnibus test plus exact pairwise
Wilcoxon signed-rank post-hoc tests.

The Wilcoxon p-value is exact: the full distribution of the signed-rank sum
over all 2^n sign assignments of the (possibly tied, midranked) absolute
differences, computed by dynamic programming on integer-doubled ranks.  A
normal approximation with continuity correction takes over past n = 25.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import chi2, norm, rankdata

from .core import CriterionDirection, LabeledMatrix
from .errors import (
    AllZeroDifferences,
    BadValue,
    LengthMismatch,
    TooFewAlgorithms,
    TooFewBenchmarks,
)

EXACT_MAX_N = 25

# Absolute differences closer than this (relative) are ranked as ties; float
# subtraction of decimal inputs otherwise splits mathematically equal values.
TIE_RTOL = 1e-9
TIE_ATOL = 1e-12


@dataclass(frozen=True)
class FriedmanResult:
    statistic: float
    p_value: float
    k: int  # algorithms
    n: int  # benchmarks


@dataclass(frozen=True)
class WilcoxonResult:
    w_statistic: float       # min of the signed-rank sums
    p_value: float           # two-sided
    n_effective: int         # pairs left after dropping zero differences
    method: str              # "exact" or "normal"
    undefined: bool = False  # all differences were zero


@dataclass(frozen=True)
class StatsReport:
    friedman: FriedmanResult
    pairwise: tuple[tuple[tuple[str, str], WilcoxonResult], ...]
    alpha: float

    @property
    def significant(self) -> tuple[tuple[str, str], ...]:
        return tuple(
            names for names, res in self.pairwise
            if not res.undefined and res.p_value < self.alpha
        )


def _midranks(values: np.ndarray) -> np.ndarray:
    """Average ranks with tolerance-based tie grouping on sorted magnitudes."""
    order = np.argsort(values, kind="stable")
    sorted_vals = values[order]
    ranks = np.empty(len(values), dtype=float)
    i = 0
    while i < len(sorted_vals):
        j = i
        while (
            j + 1 < len(sorted_vals)
            and sorted_vals[j + 1] - sorted_vals[j]
            <= TIE_ATOL + TIE_RTOL * max(abs(sorted_vals[j]), abs(sorted_vals[j + 1]))
        ):
            j += 1
        avg = (i + j) / 2.0 + 1.0  # ranks are 1-based
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _exact_tail_counts(doubled_ranks: list[int]) -> np.ndarray:
    """Distribution of the rank sum over sign assignments, on doubled ranks.

    counts[s] = number of sign vectors whose positive-rank sum equals s/2.
    """
    total = sum(doubled_ranks)
    counts = np.zeros(total + 1, dtype=float)
    counts[0] = 1.0
    for r in doubled_ranks:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[: counts.size - r]
        counts = counts + shifted
    return counts


def _exact_two_sided_p(ranks: np.ndarray, w: float) -> float:
    doubled = [int(round(2 * r)) for r in ranks]
    counts = _exact_tail_counts(doubled)
    total_doubled = sum(doubled)
    w2 = int(round(2 * w))
    lower = counts[: w2 + 1].sum()
    upper = counts[total_doubled - w2:].sum()
    return min(1.0, float((lower + upper) / 2.0 ** len(ranks)))


def _normal_two_sided_p(ranks: np.ndarray, w: float, n: int) -> float:
    mean = n * (n + 1) / 4.0
    var = n * (n + 1) * (2 * n + 1) / 24.0
    # tie correction on the midranks
    _, tie_counts = np.unique(ranks, return_counts=True)
    var -= (tie_counts ** 3 - tie_counts).sum() / 48.0
    if var <= 0:
        return 1.0
    z = (w - mean + 0.5) / math.sqrt(var)  # continuity correction toward the mean
    return min(1.0, 2.0 * float(norm.cdf(z)))


def wilcoxon_signed_rank(x, y) -> WilcoxonResult:
    """Exact two-sided paired test on x - y; zero differences are dropped."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise LengthMismatch(f"paired samples must be equal-length vectors, got {x.shape} and {y.shape}")
    if x.size < 1:
        raise LengthMismatch("paired samples must be non-empty")
    d = x - y
    d = d[d != 0.0]
    n = d.size
    if n == 0:
        raise AllZeroDifferences("all paired differences are zero; the test is undefined")
    ranks = _midranks(np.abs(d))
    w_plus = float(ranks[d > 0].sum())
    w_minus = float(ranks[d < 0].sum())
    w = min(w_plus, w_minus)
    if n <= EXACT_MAX_N:
        return WilcoxonResult(w, _exact_two_sided_p(ranks, w), n, "exact")
    return WilcoxonResult(w, _normal_two_sided_p(ranks, w, n), n, "normal")


def friedman_test(
    mu: LabeledMatrix, direction: CriterionDirection = CriterionDirection.BENEFIT
) -> FriedmanResult:
    """Chi-square Friedman test over per-benchmark algorithm ranks (best = 1)."""
    k, n = mu.shape
    if k < 2:
        raise TooFewAlgorithms(f"need at least 2 algorithms, got {k}")
    if n < 2:
        raise TooFewBenchmarks(f"need at least 2 benchmarks, got {n}")
    sign = 1.0 if direction is CriterionDirection.COST else -1.0
    ranks = np.column_stack([rankdata(sign * mu.values[:, j]) for j in range(n)])
    mean_rank = ranks.mean(axis=1)
    statistic = float(12.0 * n / (k * (k + 1)) * ((mean_rank - (k + 1) / 2.0) ** 2).sum())
    p = float(chi2.sf(statistic, k - 1))
    return FriedmanResult(statistic=statistic, p_value=p, k=k, n=n)


def pairwise_wilcoxon(
    mu: LabeledMatrix,
    alpha: float = 0.05,
    direction: CriterionDirection = CriterionDirection.BENEFIT,
) -> StatsReport:
    """All k(k-1)/2 pairwise tests plus the Friedman omnibus.

    A pair whose differences are all zero is reported as undefined with
    p = 1 rather than aborting the table.
    """
    if not (0.0 < alpha < 1.0):
        raise BadValue(f"alpha must lie in (0, 1), got {alpha}")
    fried = friedman_test(mu, direction)
    results = []
    labels = mu.row_labels
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            a, b = labels[i], labels[j]
            try:
                res = wilcoxon_signed_rank(mu.values[i], mu.values[j])
            except AllZeroDifferences:
                res = WilcoxonResult(0.0, 1.0, 0, "exact", undefined=True)
            results.append(((a, b), res))
    return StatsReport(friedman=fried, pairwise=tuple(results), alpha=alpha)
