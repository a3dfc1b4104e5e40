"""Friedman test and exact Wilcoxon signed-rank, with brute-force oracles."""

from itertools import product

import numpy as np
import pytest
from scipy.stats import rankdata

from rankbench import (
    AllZeroDifferences,
    BadValue,
    CriterionDirection,
    LabeledMatrix,
    LengthMismatch,
    TooFewAlgorithms,
    TooFewBenchmarks,
    friedman_test,
    pairwise_wilcoxon,
    wilcoxon_signed_rank,
)

B = CriterionDirection.BENEFIT
C = CriterionDirection.COST


def lm(values, rows=None, cols=None):
    values = np.atleast_2d(np.asarray(values, dtype=float))
    m, n = values.shape
    rows = rows or [f"A{i}" for i in range(m)]
    cols = cols or [f"B{j}" for j in range(n)]
    return LabeledMatrix(tuple(rows), tuple(cols), values)


def brute_force_wilcoxon_p(x, y):
    """Oracle: enumerate every sign vector over midranked |d|, two tails."""
    d = np.asarray(x, float) - np.asarray(y, float)
    d = d[d != 0]
    n = d.size
    ranks = rankdata(np.abs(d))
    w = min(ranks[d > 0].sum(), ranks[d < 0].sum())
    total = ranks.sum()
    count = 0
    for signs in product((0, 1), repeat=n):
        s = sum(r for r, b in zip(ranks, signs) if b)
        if s <= w + 1e-12 or s >= total - w - 1e-12:
            count += 1
    return min(1.0, count / 2 ** n)


# --- wilcoxon examples -------------------------------------------------------

def test_strictly_greater_12_pairs_extreme_tail():
    x = np.arange(1.0, 13.0) + 0.5
    y = np.arange(1.0, 13.0)
    res = wilcoxon_signed_rank(x, y)
    assert res.p_value == pytest.approx(2 / 4096)
    assert res.n_effective == 12
    assert res.method == "exact"


def test_fnn_cho_reference_p(case1):
    res = wilcoxon_signed_rank(case1.mu.row("FNN"), case1.mu.row("CHO"))
    assert res.p_value == pytest.approx(0.009277, abs=5e-7)


def test_knn_rec_reference_p(case2):
    res = wilcoxon_signed_rank(case2.mu.row("KNN"), case2.mu.row("REC"))
    assert res.p_value == pytest.approx(0.001953, abs=5e-7)


def test_tied_differences_use_midranks(case1):
    # DRBM vs AVG has two |d| cells equal to 0.01; the reference value only
    # appears when those are midranked despite float subtraction noise
    res = wilcoxon_signed_rank(case1.mu.row("DRBM"), case1.mu.row("AVG"))
    assert res.p_value == pytest.approx(0.015137, abs=5e-7)


def test_zero_differences_dropped(case2):
    # KNN vs FKNN share two equal cells (B1 and B6)
    res = wilcoxon_signed_rank(case2.mu.row("KNN"), case2.mu.row("FKNN"))
    assert res.n_effective == 8


def test_all_zero_differences_error():
    with pytest.raises(AllZeroDifferences):
        wilcoxon_signed_rank([1.0, 2.0], [1.0, 2.0])


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        wilcoxon_signed_rank([1.0, 2.0], [1.0])


# --- wilcoxon properties -----------------------------------------------------

def test_symmetry_in_arguments():
    rng = np.random.default_rng(0)
    for _ in range(50):
        n = int(rng.integers(2, 15))
        x = rng.normal(size=n)
        y = rng.normal(size=n)
        assert wilcoxon_signed_rank(x, y).p_value == pytest.approx(
            wilcoxon_signed_rank(y, x).p_value, rel=0, abs=0
        )


def test_p_granularity_without_ties():
    rng = np.random.default_rng(1)
    for _ in range(50):
        n = int(rng.integers(2, 13))
        x = rng.normal(size=n)
        y = x + rng.choice([-1, 1], size=n) * rng.uniform(0.5, 5.0, size=n)
        res = wilcoxon_signed_rank(x, y)
        steps = res.p_value * 2 ** res.n_effective
        assert steps == pytest.approx(round(steps), abs=1e-6)
        assert round(steps) % 2 == 0 or res.p_value == 1.0


def test_exactness_oracle_n_le_8():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        x = rng.normal(size=n)
        y = rng.normal(size=n)
        if np.all(x - y == 0):
            continue
        res = wilcoxon_signed_rank(x, y)
        assert res.p_value == pytest.approx(brute_force_wilcoxon_p(x, y), abs=1e-12)


def test_exactness_oracle_with_forced_ties():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(3, 9))
        mags = rng.choice([0.5, 1.0, 1.5], size=n)  # many tied magnitudes
        signs = rng.choice([-1.0, 1.0], size=n)
        x = np.zeros(n)
        y = -signs * mags
        res = wilcoxon_signed_rank(x, y)
        assert res.p_value == pytest.approx(brute_force_wilcoxon_p(x, y), abs=1e-12)


def test_normal_fallback_above_25():
    rng = np.random.default_rng(4)
    x = rng.normal(size=30)
    y = x + rng.normal(0.8, 1.0, size=30)
    res = wilcoxon_signed_rank(x, y)
    assert res.method == "normal"
    assert 0.0 < res.p_value <= 1.0


def test_exact_up_to_25():
    rng = np.random.default_rng(5)
    x = rng.normal(size=25)
    y = x + rng.normal(0.5, 1.0, size=25)
    res = wilcoxon_signed_rank(x, y)
    assert res.method == "exact"


# --- friedman ----------------------------------------------------------------

def test_friedman_identical_rows():
    m = lm([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]])
    res = friedman_test(m, B)
    assert res.statistic == pytest.approx(0.0)
    assert res.p_value == pytest.approx(1.0)


def test_friedman_case1_part1_magnitude(case1_no_knn):
    res = friedman_test(case1_no_knn.mu, B)
    assert res.k == 6 and res.n == 12
    assert res.p_value < 0.05  # rejects
    assert res.p_value == pytest.approx(6.026e-4, rel=1e-3)


def test_friedman_case2_magnitude(case2):
    res = friedman_test(case2.mu, C)
    assert res.p_value == pytest.approx(1.476e-5, rel=1e-3)
    assert 1e-5 / 3 <= res.p_value <= 1e-5 * 3


def test_friedman_monotone_transform_invariance(case2):
    cubed = LabeledMatrix(
        case2.mu.row_labels, case2.mu.col_labels, case2.mu.values ** 3
    )
    assert friedman_test(case2.mu, C).statistic == pytest.approx(
        friedman_test(cubed, C).statistic
    )


def test_friedman_too_few():
    with pytest.raises(TooFewAlgorithms):
        friedman_test(lm([[1.0, 2.0]]), B)
    with pytest.raises(TooFewBenchmarks):
        friedman_test(lm([[1.0], [2.0]]), B)


def test_friedman_direction_flip_keeps_statistic(case2):
    # reversing best/worst reverses ranks; the squared deviations are symmetric
    assert friedman_test(case2.mu, C).statistic == pytest.approx(
        friedman_test(case2.mu, B).statistic
    )


# --- pairwise ----------------------------------------------------------------

def test_pairwise_case1_part1_significant_set(case1_no_knn):
    report = pairwise_wilcoxon(case1_no_knn.mu, alpha=0.05, direction=B)
    assert len(report.pairwise) == 15  # 6 choose 2
    expected = {
        frozenset(p)
        for p in [
            ("FNN", "CHO"), ("DRBM", "AVG"), ("DRBM", "MV"), ("DRBM", "CHO"),
            ("ELM", "CHO"), ("AVG", "CHO"), ("MV", "CHO"),
        ]
    }
    got = {frozenset(p) for p in report.significant}
    assert got == expected


def test_pairwise_case1_full_count(case1):
    report = pairwise_wilcoxon(case1.mu, alpha=0.05, direction=B)
    assert len(report.pairwise) == 21
    assert len(report.significant) == 12


def test_pairwise_case2_count(case2):
    report = pairwise_wilcoxon(case2.mu, alpha=0.05, direction=C)
    assert len(report.pairwise) == 28
    assert len(report.significant) == 13


def test_pairwise_alpha_validation(case2):
    with pytest.raises(BadValue):
        pairwise_wilcoxon(case2.mu, alpha=0.0)
    with pytest.raises(BadValue):
        pairwise_wilcoxon(case2.mu, alpha=1.0)


def test_pairwise_identical_rows_reported_not_crashed():
    m = lm([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0], [2.0, 3.0, 4.0]])
    report = pairwise_wilcoxon(m, alpha=0.05)
    undef = [res for _, res in report.pairwise if res.undefined]
    assert len(undef) == 1
    assert undef[0].p_value == 1.0
    assert report.significant == ()
