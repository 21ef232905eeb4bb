from pathlib import Path

import numpy as np
import pytest

from src.hecke.symmetry import manin_standard
from src.hopf.algebra import group_algebra, sweedler

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def manin3():
    return manin_standard(3)


@pytest.fixture
def kc2():
    return group_algebra(2)


@pytest.fixture
def h4():
    return sweedler()


@pytest.fixture(params=[2, 3, 4], ids=lambda n: f"kC{n}")
def cyclic(request):
    return group_algebra(request.param)


@pytest.fixture(params=["kc2", "kc3", "kc4", "sweedler4"])
def bundled(request):
    return group_algebra(int(request.param[2])) if request.param.startswith("kc") else sweedler()
