import numpy as np
import pytest

import superdiscord as sd


@pytest.fixture
def bell_state():
    return sd.bell()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_unitary(rng, d):
    """Haar-ish unitary via QR of a complex Gaussian matrix."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))
