"""Partial transposition, momentum distributions and the discrete Wigner function.

Also exposes the two sign-flip identities as checks: transposing particle 1
in the coordinate basis sends ``p1 -> -p1`` both in the joint momentum
distribution and in the Wigner function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooSmall, NotHermitianSource, NotOddPrime, NotTwoParticle
from .schwinger import is_odd_prime
from .states import DensityLike

__all__ = [
    "MomentumJPD",
    "WignerTable",
    "partial_transpose_1",
    "full_transpose",
    "momentum_distribution",
    "check_momentum_flip",
    "wigner",
    "check_wigner_flip",
    "negate_first_momentum",
]

REAL_TOL = 1e-10


def partial_transpose_1(rho: DensityLike) -> DensityLike:
    """``<q1 q2|rho^T1|q1' q2'> = <q1' q2|rho|q1 q2'>``."""
    if rho.particles != 2:
        raise NotTwoParticle("partial transposition needs a two-particle operator")
    N = rho.N
    pt = rho.tensor().transpose(2, 1, 0, 3).reshape(N * N, N * N)
    return DensityLike(N, 2, pt, hermitian_hint=rho.hermitian_hint)


def full_transpose(rho: DensityLike) -> DensityLike:
    if rho.particles != 1:
        raise ValueError("full_transpose takes a one-particle operator")
    return DensityLike(rho.N, 1, rho.mat.T, hermitian_hint=rho.hermitian_hint)


def _realify(values: np.ndarray, tol: float, what: str) -> np.ndarray:
    residue = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if residue > tol:
        raise NotHermitianSource(
            f"{what} has imaginary residue {residue:.3e} > {tol:.1e}; source is not Hermitian"
        )
    return np.ascontiguousarray(values.real)


@dataclass(frozen=True)
class MomentumJPD:
    """Momentum probabilities; ``probs`` has shape ``(N,)`` or ``(N, N)`` indexed ``[p1, p2]``."""

    N: int
    particles: int
    probs: np.ndarray

    def flat(self) -> np.ndarray:
        return self.probs.ravel()


def _momentum_complex(rho: DensityLike) -> np.ndarray:
    N = rho.N
    n = np.arange(N)
    # kernel[p, n] = w^(p n); the sum below is over w^(p (n' - n)) per particle.
    kernel = np.exp(2j * np.pi * np.mod(np.outer(n, n), N) / N)
    if rho.particles == 1:
        return np.einsum("pa,ab,pb->p", kernel.conj(), rho.mat, kernel) / N
    t = rho.tensor()
    return np.einsum("pa,qb,abcd,pc,qd->pq", kernel.conj(), kernel.conj(), t, kernel, kernel) / N**2


def momentum_distribution(rho: DensityLike, tol: float = REAL_TOL) -> MomentumJPD:
    """Born probabilities of the momentum labels, from the coordinate-basis matrix.

    For two particles::

        P(p1, p2) = N^-2 sum <n1 n2|rho|n1' n2'> w^(p1 (n1' - n1)) w^(p2 (n2' - n2))
    """
    probs = _realify(_momentum_complex(rho), tol, "momentum distribution")
    return MomentumJPD(N=rho.N, particles=rho.particles, probs=probs)


def _negate_axis(values: np.ndarray, axis: int) -> np.ndarray:
    N = values.shape[axis]
    return np.take(values, (-np.arange(N)) % N, axis=axis)


def check_momentum_flip(rho: DensityLike, tol: float = 1e-12) -> bool:
    """True iff ``P_{rho^T1}(p1, p2) == P_rho(-p1, p2)`` entrywise within ``tol``.

    The one-particle case checks ``P_{rho^T}(p) == P_rho(-p)``. Refused for
    ``N = 2``, where ``p`` and ``-p`` coincide and the identity says nothing.
    """
    if rho.N <= 2:
        raise DimensionTooSmall("momentum flip is vacuous for N = 2 (p == -p)")
    flipped = partial_transpose_1(rho) if rho.particles == 2 else full_transpose(rho)
    lhs = _momentum_complex(flipped)
    rhs = _negate_axis(_momentum_complex(rho), 0)
    return bool(np.max(np.abs(lhs - rhs)) <= tol)


@dataclass(frozen=True)
class WignerTable:
    """Real Wigner values; ``values`` has axes ``(q, p)`` or ``(q1, q2, p1, p2)``."""

    N: int
    particles: int
    values: np.ndarray

    def flat(self) -> np.ndarray:
        return self.values.ravel()


def _wigner_complex(rho: DensityLike) -> np.ndarray:
    N = rho.N
    if not is_odd_prime(N):
        raise NotOddPrime(f"the discrete Wigner function needs an odd prime N, got {N}")
    idx = np.arange(N)
    q = idx[:, None]
    a = idx[None, :]
    partner = (2 * q - a) % N  # partner[q, a] = 2q - a
    # phase[p, q, a] = w^(2 p (q - a))
    phase = np.exp(2j * np.pi * np.mod(2 * idx[:, None, None] * (q - a)[None], N) / N)
    if rho.particles == 1:
        g = rho.mat[a, partner]  # g[q, a] = <a|rho|2q - a>
        return np.einsum("qa,pqa->qp", g, phase)
    t = rho.tensor()
    g = t[
        idx[None, None, :, None],
        idx[None, None, None, :],
        partner[:, None, :, None],
        partner[None, :, None, :],
    ]  # g[q1, q2, a1, a2] = <a1 a2|rho|2q1 - a1, 2q2 - a2>
    return np.einsum("qrab,pqa,srb->qrps", g, phase, phase)


def wigner(rho: DensityLike, tol: float = REAL_TOL) -> WignerTable:
    """Discrete Wigner function on the prime lattice.

    Two particles::

        W(q1, q2, p1, p2) = sum_{a1, a2} <a1 a2|rho|2q1 - a1, 2q2 - a2> w^(2 p1 (q1 - a1)) w^(2 p2 (q2 - a2))

    No ``1/N^k`` prefactor is applied, so summing the whole table gives
    ``N**particles * trace(rho)``.

    Raises
    ------
    NotOddPrime
        ``N`` is not an odd prime.
    NotHermitianSource
        The imaginary part of some entry exceeds ``tol``.
    """
    values = _realify(_wigner_complex(rho), tol, "Wigner table")
    return WignerTable(N=rho.N, particles=rho.particles, values=values)


def negate_first_momentum(table: WignerTable) -> WignerTable:
    """Relabel ``p1 -> -p1 mod N`` (``p -> -p`` for one particle)."""
    axis = 1 if table.particles == 1 else 2
    return WignerTable(table.N, table.particles, _negate_axis(table.values, axis))


def check_wigner_flip(rho: DensityLike, tol: float = 1e-12) -> bool:
    """True iff ``W_{rho^T1}(q1, q2, p1, p2) == W_rho(q1, q2, -p1, p2)`` within ``tol``.

    Works on the complex tables, so non-Hermitian input is fine too.
    """
    flipped = partial_transpose_1(rho) if rho.particles == 2 else full_transpose(rho)
    lhs = _wigner_complex(flipped)
    axis = 1 if rho.particles == 1 else 2
    rhs = _negate_axis(_wigner_complex(rho), axis)
    return bool(np.max(np.abs(lhs - rhs)) <= tol)
