"""Standard single-matrix TOPSIS: ideal solutions, separations, closeness.

Both ranking stages reuse these kernels unchanged: a weighted normalized
matrix is compared against its per-column best/worst attainable values and
each row scored by relative closeness to the best.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    CriterionDirection,
    CriterionWeights,
    LabeledMatrix,
    NormalizationScheme,
    apply_weights,
    normalize,
)
from .errors import LengthMismatch


@dataclass(frozen=True)
class IdealPair:
    """Per-column best (positive) and worst (negative) weighted values."""

    positive: np.ndarray
    negative: np.ndarray


@dataclass(frozen=True)
class SeparationPair:
    """Euclidean distances of each row to the positive and negative ideals."""

    d_plus: np.ndarray
    d_minus: np.ndarray


@dataclass(frozen=True)
class ClosenessVector:
    """Relative closeness in [0, 1] per row, aligned with row labels."""

    labels: tuple[str, ...]
    xi: np.ndarray

    def as_dict(self) -> dict[str, float]:
        return {name: float(v) for name, v in zip(self.labels, self.xi)}


def ideal_solutions(
    weighted: LabeledMatrix, directions: Sequence[CriterionDirection]
) -> IdealPair:
    """Column max is the positive ideal for benefit criteria, min for cost."""
    m, n = weighted.shape
    if len(directions) != n:
        raise LengthMismatch(f"{len(directions)} directions for {n} columns")
    col_max = weighted.values.max(axis=0)
    col_min = weighted.values.min(axis=0)
    benefit = np.array([d is CriterionDirection.BENEFIT for d in directions])
    positive = np.where(benefit, col_max, col_min)
    negative = np.where(benefit, col_min, col_max)
    return IdealPair(positive=positive, negative=negative)


def separation_distances(weighted: LabeledMatrix, ideals: IdealPair) -> SeparationPair:
    diff_plus = weighted.values - ideals.positive
    diff_minus = weighted.values - ideals.negative
    return SeparationPair(
        d_plus=np.sqrt((diff_plus ** 2).sum(axis=1)),
        d_minus=np.sqrt((diff_minus ** 2).sum(axis=1)),
    )


def closeness(sep: SeparationPair, labels: Sequence[str]) -> ClosenessVector:
    """xi = d-/(d+ + d-); a row coinciding with both ideals scores 0.5."""
    total = sep.d_plus + sep.d_minus
    xi = np.where(total == 0.0, 0.5, sep.d_minus / np.where(total == 0.0, 1.0, total))
    return ClosenessVector(labels=tuple(labels), xi=xi)


def topsis_rank(
    matrix: LabeledMatrix,
    weights: CriterionWeights,
    directions: Sequence[CriterionDirection],
    scheme: NormalizationScheme,
) -> ClosenessVector:
    """normalize -> apply_weights -> ideals -> separations -> closeness."""
    weighted = apply_weights(normalize(matrix, scheme), weights)
    ideals = ideal_solutions(weighted, directions)
    sep = separation_distances(weighted, ideals)
    return closeness(sep, matrix.row_labels)
