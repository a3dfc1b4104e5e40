"""Bundled case-study matrices.

case1: 7 classifiers x 12 benchmarks, classification accuracy (benefit).
case2: 8 classifiers x 10 benchmarks, error rate (cost).
"""

from __future__ import annotations

from importlib import resources

from .core import DecisionMatrixPair, load_matrix_pair

CASES = ("case1", "case2")


def fixture_text(name: str) -> str:
    return resources.files("rankbench.data").joinpath(name).read_text(encoding="utf-8")


def load_case(case: str) -> DecisionMatrixPair:
    if case not in CASES:
        raise KeyError(f"unknown bundled case {case!r}; choose from {CASES}")
    return load_matrix_pair(
        fixture_text(f"{case}_mu.csv"), fixture_text(f"{case}_sigma.csv")
    )
