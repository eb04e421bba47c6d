"""Clock/shift operators on the N-point periodic lattice and the sine observables.

Conventions used throughout the package:

* position kets ``|q>``, ``q = 0..N-1``, are the standard basis;
* ``Z|q> = w^q |q>`` and ``X|q> = |q+1 mod N>`` with ``w = exp(2 pi i / N)``;
* momentum kets have amplitudes ``<q|p> = w^(p q) / sqrt(N)``, so that
  ``X = w^(-p_hat)`` and ``Z = w^(q_hat)``;
* two-particle kets ``|q1 q2>`` sit at composite index ``q1 * N + q2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooSmall

__all__ = [
    "ObservablePair",
    "omega",
    "is_odd_prime",
    "build_Z",
    "build_X",
    "build_q_op",
    "build_p_op",
    "momentum_ket",
    "momentum_basis",
    "build_observables_1p",
    "build_two_particle_zx",
    "build_observables_2p",
    "observables",
    "clock_shift_pair",
    "commutator_AB",
    "commutator_closed_form",
]


def _check_dim(N: int) -> int:
    if int(N) != N or N < 2:
        raise DimensionTooSmall(f"lattice dimension must be an integer >= 2, got {N!r}")
    return int(N)


def omega(N: int) -> complex:
    """Primitive N-th root of unity ``exp(2 pi i / N)``."""
    N = _check_dim(N)
    return complex(np.exp(2j * np.pi / N))


def is_odd_prime(N: int) -> bool:
    if N < 3 or N % 2 == 0:
        return False
    k = 3
    while k * k <= N:
        if N % k == 0:
            return False
        k += 2
    return True


def _powers(N: int, exponents) -> np.ndarray:
    # Reduce mod N before exponentiating so w^N is exactly 1.
    e = np.mod(np.asarray(exponents), N)
    return np.exp(2j * np.pi * e / N)


def build_Z(N: int) -> np.ndarray:
    N = _check_dim(N)
    return np.diag(_powers(N, np.arange(N)))


def build_X(N: int) -> np.ndarray:
    N = _check_dim(N)
    X = np.zeros((N, N), dtype=complex)
    q = np.arange(N)
    X[(q + 1) % N, q] = 1.0
    return X


def momentum_ket(N: int, p: int) -> np.ndarray:
    N = _check_dim(N)
    if not 0 <= p < N:
        raise ValueError(f"momentum label must lie in [0, {N}), got {p}")
    return _powers(N, p * np.arange(N)) / np.sqrt(N)


def momentum_basis(N: int) -> np.ndarray:
    """Unitary whose column ``p`` is ``momentum_ket(N, p)``."""
    N = _check_dim(N)
    q = np.arange(N)
    return _powers(N, np.outer(q, q)) / np.sqrt(N)


def build_q_op(N: int) -> np.ndarray:
    N = _check_dim(N)
    return np.diag(np.arange(N).astype(complex))


def build_p_op(N: int) -> np.ndarray:
    # Spectral construction; avoids choosing a branch of log(X).
    F = momentum_basis(N)
    return F @ np.diag(np.arange(N).astype(complex)) @ F.conj().T


@dataclass(frozen=True)
class ObservablePair:
    """The Hermitian sine observables ``A`` (position-like) and ``B`` (momentum-like)."""

    A: np.ndarray
    B: np.ndarray
    particles: int
    N: int


def build_observables_1p(N: int) -> ObservablePair:
    Z, X = build_Z(N), build_X(N)
    A = (Z - Z.conj().T) / 2j
    B = -(X - X.conj().T) / 2j
    return ObservablePair(A=A, B=B, particles=1, N=int(N))


def build_two_particle_zx(N: int) -> tuple[np.ndarray, np.ndarray]:
    """Return ``z = Z (x) Z^dagger`` and ``x = X (x) X^dagger``."""
    Z, X = build_Z(N), build_X(N)
    z = np.kron(Z, Z.conj().T)
    x = np.kron(X, X.conj().T)
    return z, x


def build_observables_2p(N: int) -> ObservablePair:
    z, x = build_two_particle_zx(N)
    A = (z - z.conj().T) / 2j
    B = -(x - x.conj().T) / 2j
    return ObservablePair(A=A, B=B, particles=2, N=int(N))


def observables(N: int, particles: int) -> ObservablePair:
    if particles == 1:
        return build_observables_1p(N)
    if particles == 2:
        return build_observables_2p(N)
    raise ValueError(f"particles must be 1 or 2, got {particles}")


def clock_shift_pair(N: int, particles: int) -> tuple[np.ndarray, np.ndarray, complex]:
    """Clock-like operator, shift-like operator and the phase they pick up on reordering."""
    if particles == 1:
        return build_Z(N), build_X(N), omega(N)
    z, x = build_two_particle_zx(N)
    return z, x, omega(N) ** 2


def commutator_AB(pair: ObservablePair) -> np.ndarray:
    return pair.A @ pair.B - pair.B @ pair.A


def commutator_closed_form(N: int, particles: int) -> np.ndarray:
    """``[A, B]`` rewritten through the reordering phase of the unitaries.

    With ``(c, s)`` the clock/shift pair and ``ph`` the phase in
    ``c s = ph s c`` (``w`` for one particle, ``w^2`` for two)::

        [A, B] = 1/4 [ (ph - 1)(s c + c^dag s) - (ph* - 1)(c^dag s^dag + s^dag c) ]
    """
    c, s, ph = clock_shift_pair(N, particles)
    cd, sd = c.conj().T, s.conj().T
    return 0.25 * ((ph - 1) * (s @ c + cd @ s) - (np.conj(ph) - 1) * (cd @ sd + sd @ c))
