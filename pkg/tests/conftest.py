"""
共享 fixture：种子固定的随机源、四个合成代数、G2 模型与分类数据库
"""

import os
import sys

import numpy as np
import pytest

_root_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if _root_dir not in sys.path:
    sys.path.insert(0, _root_dir)

from src.algebra.composition import standard_algebra  # noqa: E402
from src.classification import ClassificationDB  # noqa: E402
from src.config.constants import COMPOSITION_DIMS  # noqa: E402
from src.geometry.g2 import SevenSpace, octonion_from_q_phi  # noqa: E402
from src.utils.sampling import RationalSampler  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(1)


@pytest.fixture
def sampler():
    return RationalSampler(1)


@pytest.fixture(scope="session")
def algebras():
    """维数 -> 复化合成代数"""
    return {dim: standard_algebra(dim) for dim in COMPOSITION_DIMS}


@pytest.fixture(scope="session")
def octonions(algebras):
    return algebras[8]


@pytest.fixture(scope="session")
def seven_space():
    return SevenSpace.corrected()


@pytest.fixture(scope="session")
def g2_algebra(seven_space):
    return octonion_from_q_phi(seven_space)


@pytest.fixture(scope="session")
def db():
    return ClassificationDB.load()


@pytest.fixture
def db_path():
    from src.config import DEFAULT_DB_PATH

    return DEFAULT_DB_PATH
