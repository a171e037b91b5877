import os

import pytest

from src.geometry.gltype import GLType

ROOT = os.path.dirname(os.path.abspath(__file__))
SPEC_DIR = os.path.join(ROOT, "specs")


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("GLORDER_MAX_DEGREE", "GLORDER_SWEEP_SAMPLES", "GLORDER_SEED",
                 "GLORDER_RESULTS_DIR", "GLORDER_VERBOSE"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def spec_dir():
    return SPEC_DIR


@pytest.fixture
def d1():
    """Three points (1:0), (0:1), (1:1) on P^1, weights (2,2,2)."""
    return GLType.create(1, [2, 2, 2], [[1, 0], [0, 1], [1, -1]])


@pytest.fixture
def d2():
    """Coordinate planes and T0+T1+T2=0 in P^2, weights (2,2,2,2)."""
    return GLType.create(2, [2, 2, 2, 2], [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])


@pytest.fixture
def beilinson():
    return GLType.create(2, [], [])


@pytest.fixture
def single():
    """d=1, one hyperplane of weight 2."""
    return GLType.create(1, [2], [[1, 0]])
