"""Domain types, CSV ingestion and the shared normalization/weighting kernels.

A decision problem is an m x n grid: rows are algorithms (alternatives),
columns are benchmarks (criteria).  Performance comes as a pair of matrices,
one of means and one of standard deviations, both in the same units.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    BadValue,
    EmptyMatrix,
    LengthMismatch,
    ShapeMismatch,
    WeightInvalid,
)

WEIGHT_SUM_TOL = 1e-9


class CriterionDirection(Enum):
    """Whether higher column values are better (accuracy) or worse (error rate)."""

    BENEFIT = "benefit"
    COST = "cost"


class NormalizationScheme(Enum):
    """Column normalization: divide by the Euclidean norm or by the column max."""

    VECTOR = "vector"
    MAX = "max"


def _freeze(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class LabeledMatrix:
    """An m x n grid of finite nonnegative reals with unique axis labels."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        rows = tuple(self.row_labels)
        cols = tuple(self.col_labels)
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 2:
            raise BadValue(f"matrix values must be 2-dimensional, got ndim={vals.ndim}")
        m, n = vals.shape
        if m < 1 or n < 1:
            raise EmptyMatrix(f"matrix must be at least 1x1, got {m}x{n}")
        if len(rows) != m or len(cols) != n:
            raise ShapeMismatch(
                f"labels do not match shape: {len(rows)} row labels, "
                f"{len(cols)} column labels for a {m}x{n} grid"
            )
        if len(set(rows)) != m:
            raise BadValue("duplicate row labels")
        if len(set(cols)) != n:
            raise BadValue("duplicate column labels")
        if not np.all(np.isfinite(vals)):
            raise BadValue("matrix contains NaN or infinite entries")
        if np.any(vals < 0):
            raise BadValue("matrix contains negative entries")
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)
        object.__setattr__(self, "values", _freeze(vals))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def row(self, label: str) -> np.ndarray:
        return self.values[self.row_labels.index(label)]

    def drop_rows(self, labels) -> "LabeledMatrix":
        drop = set(labels)
        missing = drop - set(self.row_labels)
        if missing:
            raise BadValue(f"cannot drop unknown rows: {sorted(missing)}")
        keep = [i for i, r in enumerate(self.row_labels) if r not in drop]
        if not keep:
            raise EmptyMatrix("dropping these rows leaves an empty matrix")
        return LabeledMatrix(
            tuple(self.row_labels[i] for i in keep), self.col_labels, self.values[keep]
        )


@dataclass(frozen=True)
class DecisionMatrixPair:
    """Mean and standard-deviation matrices sharing shape and labels."""

    mu: LabeledMatrix
    sigma: LabeledMatrix

    def __post_init__(self):
        if self.mu.shape != self.sigma.shape:
            raise ShapeMismatch(
                f"mean matrix is {self.mu.shape[0]}x{self.mu.shape[1]} but "
                f"std matrix is {self.sigma.shape[0]}x{self.sigma.shape[1]}"
            )
        if self.mu.row_labels != self.sigma.row_labels:
            raise ShapeMismatch("mean and std matrices disagree on row labels")
        if self.mu.col_labels != self.sigma.col_labels:
            raise ShapeMismatch("mean and std matrices disagree on column labels")

    @property
    def row_labels(self) -> tuple[str, ...]:
        return self.mu.row_labels

    @property
    def col_labels(self) -> tuple[str, ...]:
        return self.mu.col_labels

    def drop_rows(self, labels) -> "DecisionMatrixPair":
        return DecisionMatrixPair(self.mu.drop_rows(labels), self.sigma.drop_rows(labels))


@dataclass(frozen=True)
class WeightPair:
    """Mean-vs-std importance weights for the global ranking stage."""

    w_mu: float
    w_sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.w_mu) and math.isfinite(self.w_sigma)):
            raise WeightInvalid("weights must be finite")
        if self.w_mu < 0 or self.w_sigma < 0 or self.w_mu > 1 or self.w_sigma > 1:
            raise WeightInvalid(f"weights must lie in [0, 1], got ({self.w_mu}, {self.w_sigma})")
        if abs(self.w_mu + self.w_sigma - 1.0) > WEIGHT_SUM_TOL:
            raise WeightInvalid(
                f"weights must sum to 1, got {self.w_mu} + {self.w_sigma} = {self.w_mu + self.w_sigma}"
            )

    @classmethod
    def from_w_mu(cls, w_mu: float) -> "WeightPair":
        if not math.isfinite(w_mu) or not (0.0 <= w_mu <= 1.0):
            raise WeightInvalid(f"w_mu must lie in [0, 1], got {w_mu}")
        return cls(w_mu, 1.0 - w_mu)


@dataclass(frozen=True)
class CriterionWeights:
    """Per-criterion weights: nonnegative, summing to 1."""

    weights: tuple[float, ...]

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if len(w) == 0:
            raise WeightInvalid("criterion weights must be non-empty")
        if any(not math.isfinite(x) or x < 0 for x in w):
            raise WeightInvalid("criterion weights must be finite and nonnegative")
        if abs(sum(w) - 1.0) > WEIGHT_SUM_TOL:
            raise WeightInvalid(f"criterion weights must sum to 1, got {sum(w)}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, n: int) -> "CriterionWeights":
        return cls(tuple(1.0 / n for _ in range(n)))

    def __len__(self) -> int:
        return len(self.weights)


def parse_number(cell: str) -> float:
    """Parse a numeric cell: period decimal, comma accepted when no period present."""
    text = cell.strip()
    if not text:
        raise BadValue("empty numeric cell")
    if "," in text:
        if "." in text:
            raise BadValue(f"ambiguous numeric cell {cell!r}: mixes comma and period")
        text = text.replace(",", ".", 1)
        if "," in text:
            raise BadValue(f"bad numeric cell {cell!r}: multiple commas")
    try:
        value = float(text)
    except ValueError:
        raise BadValue(f"non-numeric cell {cell!r}") from None
    if math.isnan(value) or math.isinf(value):
        raise BadValue(f"non-finite numeric cell {cell!r}")
    return value


def parse_matrix_csv(source: str, name: str = "matrix") -> LabeledMatrix:
    """Parse one CSV source against the grammar: header `algorithm,<benchmarks...>`,
    then one row per algorithm.  Labels are trimmed and case-sensitive."""
    text = source.lstrip("﻿")
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise EmptyMatrix(f"{name}: no rows at all")
    header = [c.strip() for c in rows[0]]
    if not header or header[0] != "algorithm":
        raise BadValue(f"{name}: first header cell must be 'algorithm', got {header[0] if header else ''!r}")
    col_labels = header[1:]
    if not col_labels:
        raise EmptyMatrix(f"{name}: header names no benchmarks")
    body = rows[1:]
    if not body:
        raise EmptyMatrix(f"{name}: no data rows")
    row_labels = []
    values = []
    for lineno, row in enumerate(body, start=2):
        cells = [c.strip() for c in row]
        if len(cells) != len(col_labels) + 1:
            raise ShapeMismatch(
                f"{name} line {lineno}: expected {len(col_labels) + 1} cells, got {len(cells)}"
            )
        row_labels.append(cells[0])
        try:
            values.append([parse_number(c) for c in cells[1:]])
        except BadValue as exc:
            raise BadValue(f"{name} line {lineno}: {exc}") from None
    try:
        return LabeledMatrix(tuple(row_labels), tuple(col_labels), np.array(values))
    except BadValue as exc:
        raise BadValue(f"{name}: {exc}") from None


def load_matrix_pair(mean_source: str, std_source: str) -> DecisionMatrixPair:
    """Build a validated pair from two CSV texts.

    Row/column order follows the mean file; the std file may list the same
    labels in a different order and is realigned.  Any label-set disagreement
    is a ShapeMismatch.
    """
    mu = parse_matrix_csv(mean_source, name="mean matrix")
    sigma = parse_matrix_csv(std_source, name="std matrix")
    if set(mu.row_labels) != set(sigma.row_labels) or set(mu.col_labels) != set(sigma.col_labels):
        raise ShapeMismatch(
            "mean and std files disagree on labels: "
            f"rows {sorted(set(mu.row_labels) ^ set(sigma.row_labels)) or 'match'}, "
            f"columns {sorted(set(mu.col_labels) ^ set(sigma.col_labels)) or 'match'}"
        )
    if mu.shape != sigma.shape:
        raise ShapeMismatch(f"mean matrix is {mu.shape} but std matrix is {sigma.shape}")
    if sigma.row_labels != mu.row_labels or sigma.col_labels != mu.col_labels:
        ri = [sigma.row_labels.index(r) for r in mu.row_labels]
        ci = [sigma.col_labels.index(c) for c in mu.col_labels]
        sigma = LabeledMatrix(mu.row_labels, mu.col_labels, sigma.values[np.ix_(ri, ci)])
    return DecisionMatrixPair(mu, sigma)


def normalize(matrix: LabeledMatrix, scheme: NormalizationScheme) -> LabeledMatrix:
    """Normalize each column; an all-zero column stays all-zero."""
    x = matrix.values
    if scheme is NormalizationScheme.VECTOR:
        divisors = np.sqrt((x ** 2).sum(axis=0))
    elif scheme is NormalizationScheme.MAX:
        divisors = x.max(axis=0)
    else:
        raise BadValue(f"unknown normalization scheme {scheme!r}")
    divisors = np.where(divisors == 0.0, 1.0, divisors)
    return LabeledMatrix(matrix.row_labels, matrix.col_labels, x / divisors)


def column_divisors(matrix: LabeledMatrix, scheme: NormalizationScheme) -> np.ndarray:
    """The per-column divisors normalize() would apply (1.0 for all-zero columns)."""
    x = matrix.values
    if scheme is NormalizationScheme.VECTOR:
        divisors = np.sqrt((x ** 2).sum(axis=0))
    else:
        divisors = x.max(axis=0)
    return np.where(divisors == 0.0, 1.0, divisors)


def apply_weights(normalized: LabeledMatrix, weights: CriterionWeights) -> LabeledMatrix:
    """Scale column j by w_j."""
    if len(weights) != normalized.shape[1]:
        raise LengthMismatch(
            f"{len(weights)} weights for {normalized.shape[1]} columns"
        )
    w = np.asarray(weights.weights, dtype=float)
    return LabeledMatrix(normalized.row_labels, normalized.col_labels, normalized.values * w)
