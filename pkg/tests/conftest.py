"""
Shared fixtures: seeded generator and common extensions
"""
import math

import numpy as np
import pytest

from src.extensions import ExtensionParam


def random_hermitian(rng, size: int = 4, scale: float = 1.0) -> np.ndarray:
    """Hermitian matrix with Gaussian entries"""
    m = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    return scale * (m + m.conj().T) / 2.0


def random_unitary(rng, size: int = 2) -> np.ndarray:
    z = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def friedrichs():
    return ExtensionParam.friedrichs()


@pytest.fixture
def krein():
    return ExtensionParam.krein()


@pytest.fixture
def half_pi_theta():
    """Theta = (pi/2) I, which cancels Lambda(0) at alpha = 1/2"""
    return ExtensionParam.from_theta(0.5 * math.pi * np.eye(4))
