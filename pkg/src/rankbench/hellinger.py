"""Hellinger-distance baseline: each cell is a Gaussian summarized by (mu, sigma).

Instead of Euclidean separation on weighted values, each cell's distance to a
per-criterion ideal Gaussian is the Hellinger distance, which folds the
standard deviation into the comparison directly.  Undefined at sigma = 0, so
zero deviations are replaced by a small positive floor first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .atopsis import DEFAULT_TIE_EPSILON, GlobalRanking, _sort_and_group
from .core import (
    CriterionDirection,
    DecisionMatrixPair,
    NormalizationScheme,
    column_divisors,
)
from .errors import NonPositiveSigma, NonPositiveSigmaFloor

# Width given to exactly-deterministic cells.  Calibrated on the bundled
# case studies: floors near 1e-4 collapse those cells to near-zero width,
# which lands them maximally far from BOTH ideals and inverts their rank.
DEFAULT_SIGMA_FLOOR = 0.1


@dataclass(frozen=True)
class GaussianSummary:
    """A Gaussian with strictly positive width."""

    mu: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.mu) and math.isfinite(self.sigma)):
            raise NonPositiveSigma("Gaussian parameters must be finite")
        if self.sigma <= 0:
            raise NonPositiveSigma(f"sigma must be > 0, got {self.sigma}")


def _squared_hellinger(mu_a, sg_a, mu_b, sg_b):
    """Vectorized H^2 between Gaussians; callers guarantee positive sigmas."""
    s2 = sg_a ** 2 + sg_b ** 2
    bc = np.sqrt(2.0 * sg_a * sg_b / s2) * np.exp(-((mu_a - mu_b) ** 2) / (4.0 * s2))
    return np.clip(1.0 - bc, 0.0, 1.0)


def hellinger_distance(a: GaussianSummary, b: GaussianSummary) -> float:
    """H(a, b) in [0, 1]: 0 iff identical, approaching 1 as the means separate."""
    return float(np.sqrt(_squared_hellinger(a.mu, a.sigma, b.mu, b.sigma)))


def hellinger_topsis_rank(
    pair: DecisionMatrixPair,
    direction: CriterionDirection = CriterionDirection.BENEFIT,
    scheme: NormalizationScheme = NormalizationScheme.MAX,
    sigma_floor: float = DEFAULT_SIGMA_FLOOR,
    tie_epsilon: float = DEFAULT_TIE_EPSILON,
) -> GlobalRanking:
    """Rank by closeness where separations are Hellinger distances.

    Zero sigmas become sigma_floor (input units).  Means are normalized per
    scheme and each sigma cell divided by its mean column's divisor so the
    pair stays on one scale.  Per criterion the positive ideal is
    (best mean, smallest sigma) and the negative ideal (worst mean, largest
    sigma); separations aggregate per-criterion H^2 Euclidean-style.
    """
    if not math.isfinite(sigma_floor) or sigma_floor <= 0:
        raise NonPositiveSigmaFloor(f"sigma floor must be > 0, got {sigma_floor}")
    divisors = column_divisors(pair.mu, scheme)
    mu = pair.mu.values / divisors
    sigma = np.where(pair.sigma.values == 0.0, sigma_floor, pair.sigma.values) / divisors

    benefit = direction is CriterionDirection.BENEFIT
    mu_pos = mu.max(axis=0) if benefit else mu.min(axis=0)
    mu_neg = mu.min(axis=0) if benefit else mu.max(axis=0)
    sg_pos = sigma.min(axis=0)
    sg_neg = sigma.max(axis=0)

    h2_pos = _squared_hellinger(mu, sigma, mu_pos, sg_pos)
    h2_neg = _squared_hellinger(mu, sigma, mu_neg, sg_neg)
    d_plus = np.sqrt(h2_pos.sum(axis=1))
    d_minus = np.sqrt(h2_neg.sum(axis=1))
    total = d_plus + d_minus
    xi = np.where(total == 0.0, 0.5, d_minus / np.where(total == 0.0, 1.0, total))

    labels = pair.row_labels
    order, groups = _sort_and_group(labels, xi, tie_epsilon)
    return GlobalRanking(
        labels=labels,
        xi_global=xi,
        order=order,
        tie_groups=groups,
        tie_epsilon=tie_epsilon,
    )
