from pathlib import Path

import pytest

from rankbench import load_case

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "rankbench" / "data"

CASE1_MU = DATA_DIR / "case1_mu.csv"
CASE1_SIGMA = DATA_DIR / "case1_sigma.csv"
CASE2_MU = DATA_DIR / "case2_mu.csv"
CASE2_SIGMA = DATA_DIR / "case2_sigma.csv"


@pytest.fixture(scope="session")
def case1():
    return load_case("case1")


@pytest.fixture(scope="session")
def case2():
    return load_case("case2")


@pytest.fixture(scope="session")
def case1_no_knn(case1):
    return case1.drop_rows(["KNN"])
