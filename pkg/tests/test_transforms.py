import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptur import qmat
from ptur.errors import DimensionTooSmall, NotHermitianSource, NotOddPrime, NotTwoParticle
from ptur.schwinger import momentum_ket
from ptur.states import (
    DensityLike,
    maximally_mixed,
    momentum_state,
    phi_plus,
    position_state,
    product,
    werner,
)
from ptur.transforms import (
    check_momentum_flip,
    check_wigner_flip,
    full_transpose,
    momentum_distribution,
    negate_first_momentum,
    partial_transpose_1,
    wigner,
)

from helpers import random_hermitian_density, random_matrix, random_state
from oracles import jpd_loops, partial_transpose_loops, wigner_loops, werner_pt_spectrum

seeds = st.integers(min_value=0, max_value=2**32 - 1)


# -- partial transposition ---------------------------------------------------


def test_pt_matches_loop_definition(rng):
    N = 3
    m = random_matrix(rng, N * N)
    pt = partial_transpose_1(DensityLike(N, 2, m))
    assert np.array_equal(pt.mat, partial_transpose_loops(m, N))


def test_pt_of_real_symmetric_product_is_unchanged(rng):
    def sym(n):
        a = rng.standard_normal((n, n))
        return DensityLike(n, 1, a + a.T)

    rho = product(sym(3), sym(3))
    assert np.array_equal(partial_transpose_1(rho).mat, rho.mat)


@pytest.mark.parametrize("N", [2, 3, 4])
@pytest.mark.parametrize("r", [0.0, 0.3, 1.0])
def test_pt_werner_elements(N, r):
    m = partial_transpose_1(werner(N, r)).mat
    for q1 in range(N):
        for q2 in range(N):
            for p1 in range(N):
                for p2 in range(N):
                    expected = r / N * (q1 == p2) * (q2 == p1) + (1 - r) / N**2 * (q1 == p1) * (q2 == p2)
                    assert abs(m[q1 * N + q2, p1 * N + p2] - expected) < 1e-15


def test_pt_bell_min_eigenvalue():
    assert qmat.hermitian_eigenvalues(partial_transpose_1(phi_plus(2)).mat)[0] == pytest.approx(-0.5, abs=1e-12)


@pytest.mark.parametrize("N,r", [(3, 0.5), (4, 0.2), (5, 1.0)])
def test_pt_werner_spectrum(N, r):
    lam = qmat.hermitian_eigenvalues(partial_transpose_1(werner(N, r)).mat)
    assert np.allclose(lam, werner_pt_spectrum(N, r), atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([2, 3, 4]))
def test_pt_involution_trace_hermiticity(seed, N):
    rng = np.random.default_rng(seed)
    rho = random_hermitian_density(rng, N)
    pt = partial_transpose_1(rho)
    assert np.max(np.abs(partial_transpose_1(pt).mat - rho.mat)) <= 1e-15
    assert abs(pt.trace() - rho.trace()) < 1e-12
    assert qmat.is_hermitian(pt.mat, 1e-12)


def test_pt_needs_two_particles():
    with pytest.raises(NotTwoParticle):
        partial_transpose_1(maximally_mixed(3, 1))


def test_full_transpose():
    d = DensityLike(4, 1, np.diag([0.1, 0.2, 0.3, 0.4]))
    assert np.array_equal(full_transpose(d).mat, d.mat)
    assert np.allclose(full_transpose(momentum_state(5, 2)).mat, momentum_state(5, 3).mat, atol=1e-12)


def test_full_transpose_involution(rng):
    rho = random_hermitian_density(rng, 4, particles=1)
    assert np.array_equal(full_transpose(full_transpose(rho)).mat, rho.mat)


# -- momentum distributions ----------------------------------------------------


def test_jpd_maximally_mixed():
    jpd = momentum_distribution(maximally_mixed(4))
    assert np.allclose(jpd.probs, 1 / 16, atol=1e-15)


def test_jpd_phi_plus_anticorrelated():
    N = 5
    jpd = momentum_distribution(phi_plus(N))
    for p1 in range(N):
        for p2 in range(N):
            assert abs(jpd.probs[p1, p2] - ((p1 + p2) % N == 0) / N) < 1e-12


def test_jpd_position_eigenstate_uniform():
    jpd = momentum_distribution(position_state(5, 2))
    assert np.allclose(jpd.probs, 1 / 5, atol=1e-15)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_jpd_against_loops_and_projectors(rng, N):
    rho = random_state(rng, N)
    probs = momentum_distribution(rho).probs
    assert np.allclose(probs, jpd_loops(rho.mat, N, 2).real, atol=1e-12)
    for p1 in range(N):
        for p2 in range(N):
            ket = np.kron(momentum_ket(N, p1), momentum_ket(N, p2))
            assert abs(probs[p1, p2] - np.vdot(ket, rho.mat @ ket).real) < 1e-12
    assert np.all(probs >= -1e-10)
    assert abs(probs.sum() - 1) < 1e-10


def test_jpd_one_particle_against_loops(rng):
    rho = random_state(rng, 5, particles=1)
    assert np.allclose(momentum_distribution(rho).probs, jpd_loops(rho.mat, 5, 1).real, atol=1e-12)


def test_jpd_refuses_non_hermitian(rng):
    with pytest.raises(NotHermitianSource):
        momentum_distribution(DensityLike(3, 2, random_matrix(rng, 9)))


def test_momentum_flip_phi_plus():
    N = 5
    rho = phi_plus(N)
    after = momentum_distribution(partial_transpose_1(rho)).probs
    for p1 in range(N):
        for p2 in range(N):
            assert abs(after[p1, p2] - ((p2 - p1) % N == 0) / N) < 1e-12
    assert check_momentum_flip(rho)


def test_momentum_flip_product_of_real_symmetric(rng):
    a = rng.random((3, 3))
    rho = product(DensityLike(3, 1, a + a.T), DensityLike(3, 1, np.eye(3)))
    assert check_momentum_flip(rho)


@pytest.mark.parametrize("N", [3, 5, 7])
def test_momentum_flip_random(rng, N):
    for _ in range(5):
        assert check_momentum_flip(random_hermitian_density(rng, N), tol=1e-12)
    assert check_momentum_flip(random_hermitian_density(rng, N, particles=1), tol=1e-12)


def test_momentum_flip_refuses_n2():
    with pytest.raises(DimensionTooSmall):
        check_momentum_flip(phi_plus(2))


# -- Wigner function -----------------------------------------------------------


def test_wigner_maximally_mixed_constant():
    table = wigner(maximally_mixed(3))
    assert table.values.shape == (3, 3, 3, 3)
    assert np.allclose(table.flat(), 0.1111111111111111, atol=1e-15)


def test_wigner_position_eigenstate():
    N, q0 = 5, 3
    W = wigner(position_state(N, q0)).values
    expected = np.zeros((N, N))
    expected[q0, :] = 1.0
    assert np.allclose(W, expected, atol=1e-12)


@pytest.mark.parametrize("N", [3, 5])
def test_wigner_against_loops(rng, N):
    rho = random_hermitian_density(rng, N)
    assert np.allclose(wigner(rho).values, wigner_loops(rho.mat, N, 2).real, atol=1e-12)
    one = random_hermitian_density(rng, N, particles=1)
    assert np.allclose(wigner(one).values, wigner_loops(one.mat, N, 1).real, atol=1e-12)


def test_wigner_position_marginal_werner():
    N = 3
    rho = werner(N, 0.7)
    W = wigner(rho).values
    pos = np.diag(rho.mat).real.reshape(N, N)
    assert np.allclose(W.sum(axis=(2, 3)), N**2 * pos, atol=1e-12)


def test_wigner_flat_index_convention():
    rho = werner(3, 0.4)
    table = wigner(rho)
    q1, q2, p1, p2 = 1, 2, 0, 2
    assert table.flat()[((q1 * 3 + q2) * 3 + p1) * 3 + p2] == table.values[q1, q2, p1, p2]


@pytest.mark.parametrize("N", [2, 4, 9])
def test_wigner_needs_odd_prime(N):
    with pytest.raises(NotOddPrime):
        wigner(maximally_mixed(N))


def test_wigner_refuses_non_hermitian(rng):
    with pytest.raises(NotHermitianSource):
        wigner(DensityLike(3, 2, random_matrix(rng, 9)))


def test_wigner_flip_examples(rng):
    assert check_wigner_flip(maximally_mixed(3))
    assert check_wigner_flip(phi_plus(3))
    for N in (5, 7):
        assert check_wigner_flip(random_hermitian_density(rng, N), tol=1e-12)
    # One-particle analogue and non-Hermitian input.
    assert check_wigner_flip(random_hermitian_density(rng, 5, particles=1), tol=1e-12)
    assert check_wigner_flip(DensityLike(3, 2, random_matrix(rng, 9)), tol=1e-12)


def test_wigner_flip_relabeling_phi_plus():
    before = wigner(phi_plus(3))
    after = wigner(partial_transpose_1(phi_plus(3)))
    assert np.allclose(after.values, negate_first_momentum(before).values, atol=1e-12)
    # The flip is not the identity here, so the check has teeth.
    assert not np.allclose(after.values, before.values, atol=1e-6)


def test_wigner_flip_needs_odd_prime():
    with pytest.raises(NotOddPrime):
        check_wigner_flip(phi_plus(4))


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([3, 5, 7]), st.sampled_from([1, 2]))
def test_sign_flips_hold_for_arbitrary_operators(seed, N, particles):
    rng = np.random.default_rng(seed)
    m = random_matrix(rng, N**particles)
    rho = DensityLike(N, particles, m / np.linalg.norm(m))
    assert check_wigner_flip(rho)
    assert check_momentum_flip(rho)
