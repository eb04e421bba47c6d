"""Small dense complex-matrix kernel.

Every operator in the package is a square ``complex128`` numpy array. The
helpers here add the shape/finiteness checks and the Hermitian-only
eigenvalue path the rest of the code relies on.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotHermitian

DEFAULT_TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a square, finite complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise DimensionMismatch("matrix dimension must be positive")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Tensor product with particle 1 as the slow index: ``i = i_a * dim_b + i_b``."""
    return np.kron(as_matrix(a), as_matrix(b))


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_matrix(a)))


def hermiticity_residue(a) -> float:
    """Largest entrywise deviation ``max |a - a^dagger|``."""
    m = as_matrix(a)
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    return hermiticity_residue(a) <= tol


def hermitian_eigenvalues(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Ascending real spectrum of a Hermitian matrix.

    The eigenproblem is solved on the symmetrized part ``(a + a^dagger)/2``
    so rounding noise below ``tol`` cannot leak into the result.

    Raises
    ------
    NotHermitian
        If ``max |a - a^dagger|`` exceeds ``tol``.
    """
    m = as_matrix(a)
    residue = hermiticity_residue(m)
    if residue > tol:
        raise NotHermitian(f"matrix is not Hermitian (residue {residue:.3e} > {tol:.1e})")
    h = 0.5 * (m + m.conj().T)
    return np.linalg.eigvalsh(h)


def is_psd(a, tol: float = DEFAULT_TOL) -> bool:
    return bool(hermitian_eigenvalues(a, tol)[0] >= -tol)
