# coding: utf-8
import os
from pathlib import Path
import shutil
import tempfile
from typing import Callable
import numpy as np
import pytest
from stressshield.utils.tensor_core import SymStress3


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: randomized property checks at full sample size")


@pytest.fixture(scope="session")
def tmp_path_session():
    result = Path(tempfile.mkdtemp())
    yield result
    if os.path.exists(result):
        shutil.rmtree(result, ignore_errors=True)


@pytest.fixture(scope="function")
def tmp_path_fn():
    result = Path(tempfile.mkdtemp())
    yield result
    if os.path.exists(result):
        shutil.rmtree(result, ignore_errors=True)


@pytest.fixture(scope="function")
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture(scope="function")
def random_sym(rng) -> Callable[[], SymStress3]:
    def make() -> SymStress3:
        return SymStress3.from_components(rng.standard_normal(6))

    return make


@pytest.fixture(scope="function")
def random_rotation(rng) -> Callable[[], np.ndarray]:
    def make() -> np.ndarray:
        q, r = np.linalg.qr(rng.standard_normal((3, 3)))
        q = q @ np.diag(np.sign(np.diag(r)))
        if np.linalg.det(q) < 0:
            q[:, 0] = -q[:, 0]
        return q

    return make
