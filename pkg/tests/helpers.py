"""Random operators for property-style tests."""

import numpy as np

from ptur.states import DensityLike


def random_matrix(rng, dim):
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def random_hermitian(rng, dim):
    a = random_matrix(rng, dim)
    return (a + a.conj().T) / 2


def random_state_matrix(rng, dim, rank=None):
    """Mixture of ``rank`` random pure states (full rank by default)."""
    rank = rank or dim
    kets = random_matrix(rng, dim)[:, :rank]
    weights = rng.random(rank)
    m = (kets * weights) @ kets.conj().T
    return m / np.trace(m)


def random_hermitian_density(rng, N, particles=2):
    """Hermitian, generally indefinite operator with unit Frobenius norm."""
    h = random_hermitian(rng, N**particles)
    return DensityLike(N, particles, h / np.linalg.norm(h))


def random_state(rng, N, particles=2, rank=None):
    return DensityLike(N, particles, random_state_matrix(rng, N**particles, rank), hermitian_hint=True)
