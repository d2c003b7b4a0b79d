import numpy as np
import pytest

from switchlab.linalg import DensityOperator
from switchlab.relations import haar_unitary


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_pure_vector(dim, rng):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_density(dims, rng, rank=None):
    """Random full-rank (or rank-limited) density operator on prod(dims)."""
    dim = int(np.prod(dims))
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    m = g @ g.conj().T
    return DensityOperator(m / np.trace(m).real, tuple(dims))


def random_unitary(dim, rng):
    return haar_unitary(dim, rng)
