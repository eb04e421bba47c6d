import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptur import qmat
from ptur.errors import DimensionMismatch, NotHermitian
from ptur.schwinger import build_X, build_Z, omega
from ptur.states import maximally_mixed, werner
from ptur.transforms import partial_transpose_1

from helpers import random_hermitian, random_matrix

I2 = np.eye(2)
PX = np.array([[0, 1], [1, 0]], dtype=complex)
PZ = np.array([[1, 0], [0, -1]], dtype=complex)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_matmul_identity():
    assert np.array_equal(qmat.matmul(I2, I2), I2)


def test_matmul_pauli():
    assert np.allclose(qmat.matmul(PX, PZ), [[0, -1], [1, 0]], atol=0)


def test_matmul_weyl_n3():
    Z, X = build_Z(3), build_X(3)
    assert np.allclose(qmat.matmul(Z, X), omega(3) * qmat.matmul(X, Z), atol=1e-12)


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        qmat.matmul(np.eye(2), np.eye(3))


def test_as_matrix_rejects_non_finite_and_non_square():
    with pytest.raises(ValueError):
        qmat.as_matrix([[np.nan, 0], [0, 1]])
    with pytest.raises(DimensionMismatch):
        qmat.as_matrix(np.zeros((2, 3)))


def test_kron_identity_and_index_convention():
    assert np.array_equal(qmat.kron(I2, I2), np.eye(4))
    w = omega(3)
    k = qmat.kron(np.diag([1, w, w**2]), np.eye(3))
    assert np.allclose(k, np.diag([w ** (i // 3) for i in range(9)]), atol=1e-15)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_kron_mixed_product_and_associativity(seed):
    rng = np.random.default_rng(seed)
    a, b, c, d = (random_matrix(rng, 3) for _ in range(4))
    assert np.allclose(qmat.kron(a, b) @ qmat.kron(c, d), qmat.kron(a @ c, b @ d), atol=1e-12, rtol=0)
    assert np.allclose(qmat.kron(qmat.kron(a, b), c), qmat.kron(a, qmat.kron(b, c)), atol=1e-12, rtol=0)
    # Entry-by-entry definition as an oracle.
    k = qmat.kron(a, b)
    for i in range(9):
        for j in range(9):
            assert abs(k[i, j] - a[i // 3, j // 3] * b[i % 3, j % 3]) < 1e-14


def test_adjoint():
    assert np.array_equal(qmat.adjoint(np.eye(3)), np.eye(3))
    X = build_X(3)
    assert np.allclose(qmat.adjoint(X), X @ X)
    assert np.allclose(X @ qmat.adjoint(X), np.eye(3))


def test_adjoint_involution(rng):
    a = random_matrix(rng, 5)
    assert np.array_equal(qmat.adjoint(qmat.adjoint(a)), a)


@pytest.mark.parametrize("N", [2, 3, 5, 8])
def test_trace_identity_and_shift(N):
    assert qmat.trace(np.eye(N)) == N
    assert qmat.trace(build_X(N)) == 0


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_trace_properties(seed):
    rng = np.random.default_rng(seed)
    a, b = random_matrix(rng, 3), random_matrix(rng, 3)
    direct = sum(a[i, i] for i in range(3)) * sum(b[i, i] for i in range(3))
    assert abs(qmat.trace(qmat.kron(a, b)) - direct) < 1e-12
    c, d = random_matrix(rng, 4), random_matrix(rng, 4)
    assert abs(qmat.trace(c @ d) - qmat.trace(d @ c)) < 1e-12


def test_hermitian_eigenvalues_examples():
    assert np.allclose(qmat.hermitian_eigenvalues(np.diag([3, 1, 2])), [1, 2, 3])
    assert np.allclose(qmat.hermitian_eigenvalues(PX), [-1, 1])


def test_hermitian_eigenvalues_werner_pt():
    lam = qmat.hermitian_eigenvalues(partial_transpose_1(werner(3, 0.5)).mat)
    assert lam[0] == pytest.approx(0.5 / 9 - 0.5 / 3, abs=1e-12)
    assert lam[0] == pytest.approx(-0.1111111111111111, abs=1e-12)


def test_hermitian_eigenvalues_refuses_non_hermitian():
    with pytest.raises(NotHermitian):
        qmat.hermitian_eigenvalues(build_X(3))


def test_hermitian_eigenvalues_random(rng):
    h = random_hermitian(rng, 6)
    lam = qmat.hermitian_eigenvalues(h)
    assert np.all(np.diff(lam) >= 0)
    assert abs(lam.sum() - np.trace(h).real) < 1e-10
    # Each eigenvalue is a stationary Rayleigh quotient: (H - lam) v ~ 0 for its eigenvector.
    _, vecs = np.linalg.eigh(h)
    for k in range(6):
        v = vecs[:, k]
        rq = (v.conj() @ h @ v).real
        assert abs(rq - lam[k]) < 1e-8
        assert np.linalg.norm(h @ v - lam[k] * v) < 1e-8


def test_is_hermitian():
    assert qmat.is_hermitian(np.eye(3))
    assert not qmat.is_hermitian(build_X(3))


@pytest.mark.parametrize("N", [2, 3, 4, 6])
@pytest.mark.parametrize("r", [-0.05, 0.0, 0.4, 1.0])
def test_werner_pt_is_hermitian(N, r):
    assert qmat.is_hermitian(partial_transpose_1(werner(N, r)).mat)


def test_is_psd():
    assert qmat.is_psd(maximally_mixed(4).mat)
    for N in (2, 3, 5):
        assert qmat.is_psd(werner(N, 1.0).mat)
    assert not qmat.is_psd(partial_transpose_1(werner(3, 0.3)).mat)
    with pytest.raises(NotHermitian):
        qmat.is_psd(build_X(4))
