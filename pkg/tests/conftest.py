"""Shared fixtures"""

import numpy as np
import pytest

from neutrino_sta.algebra import blades
from neutrino_sta.algebra.multivector import Multivector
from neutrino_sta.calculus.fieldmap import GridSpec
from neutrino_sta.config.settings import Settings


@pytest.fixture
def rng():
    return np.random.default_rng(Settings.DEFAULT_SEED)


@pytest.fixture
def random_multivectors(rng):
    return Multivector(rng.standard_normal((32, blades.DIMENSION)))


@pytest.fixture
def random_even(rng):
    coeffs = np.zeros((64, blades.DIMENSION))
    coeffs[:, blades.EVEN_INDICES] = rng.standard_normal((64, len(blades.EVEN_INDICES)))
    return Multivector(coeffs)


@pytest.fixture
def fine_grid():
    """Two points per axis with a small Richardson step"""
    return GridSpec.default(count=2).with_step(Settings.PRECISION_STEP)


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    monkeypatch.delenv(Settings.OUTPUT_DIR_ENV, raising=False)
    return tmp_path / "out"
