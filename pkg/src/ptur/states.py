"""Density-like operators for one or two qudits and the named states built on them."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import qmat
from .errors import DimensionMismatch, DimensionTooSmall, NotTwoParticle
from .schwinger import momentum_ket

__all__ = [
    "DensityLike",
    "ValidationReport",
    "WernerSpec",
    "density",
    "position_state",
    "momentum_state",
    "maximally_mixed",
    "product",
    "phi_plus",
    "werner",
    "partial_trace",
    "validate_state",
]


@dataclass(frozen=True)
class DensityLike:
    """A matrix on ``N**particles`` dimensions playing the role of a state.

    Nothing here assumes Hermiticity or positivity: partial transposes of
    entangled states are exactly the objects that fail those tests.
    ``mat`` is stored read-only.
    """

    N: int
    particles: int
    mat: np.ndarray = field(repr=False)
    hermitian_hint: bool = False

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise DimensionTooSmall(f"lattice dimension must be an integer >= 2, got {self.N!r}")
        if self.particles not in (1, 2):
            raise ValueError(f"particles must be 1 or 2, got {self.particles!r}")
        m = qmat.as_matrix(self.mat).copy()
        dim = self.N**self.particles
        if m.shape[0] != dim:
            raise DimensionMismatch(
                f"matrix of size {m.shape[0]} does not match N={self.N}, particles={self.particles}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.N**self.particles

    def trace(self) -> complex:
        return qmat.trace(self.mat)

    def tensor(self) -> np.ndarray:
        """Two-particle matrix as a rank-4 array indexed ``[q1, q2, q1', q2']``."""
        if self.particles != 2:
            raise NotTwoParticle("tensor view needs a two-particle operator")
        N = self.N
        return self.mat.reshape(N, N, N, N)

    def to_dict(self, metadata: dict[str, str] | None = None) -> dict:
        from .io import state_to_dict

        return state_to_dict(self, metadata)

    @classmethod
    def from_dict(cls, payload: dict) -> "DensityLike":
        from .io import state_from_dict

        return state_from_dict(payload)


def density(mat, N: int, particles: int = 2) -> DensityLike:
    return DensityLike(N=N, particles=particles, mat=mat)


def _projector(ket: np.ndarray) -> np.ndarray:
    return np.outer(ket, ket.conj())


def position_state(N: int, q: int) -> DensityLike:
    ket = np.zeros(N, dtype=complex)
    ket[q % N] = 1.0
    return DensityLike(N, 1, _projector(ket), hermitian_hint=True)


def momentum_state(N: int, p: int) -> DensityLike:
    return DensityLike(N, 1, _projector(momentum_ket(N, p)), hermitian_hint=True)


def maximally_mixed(N: int, particles: int = 2) -> DensityLike:
    dim = N**particles
    return DensityLike(N, particles, np.eye(dim, dtype=complex) / dim, hermitian_hint=True)


def product(a: DensityLike, b: DensityLike) -> DensityLike:
    if a.particles != 1 or b.particles != 1 or a.N != b.N:
        raise DimensionMismatch("product() takes two one-particle operators of equal N")
    return DensityLike(
        a.N, 2, np.kron(a.mat, b.mat), hermitian_hint=a.hermitian_hint and b.hermitian_hint
    )


def phi_plus(N: int) -> DensityLike:
    """Maximally entangled ``(1/sqrt N) sum_q |q q>`` as a density matrix."""
    ket = np.zeros(N * N, dtype=complex)
    ket[np.arange(N) * (N + 1)] = 1.0 / np.sqrt(N)
    return DensityLike(N, 2, _projector(ket), hermitian_hint=True)


@dataclass(frozen=True)
class WernerSpec:
    N: int
    r: float

    @property
    def r_min(self) -> float:
        return -1.0 / (self.N**2 - 1)

    def is_valid_state(self) -> bool:
        return self.r_min <= self.r <= 1.0


def werner(spec: WernerSpec | int, r: float | None = None) -> DensityLike:
    """``r |Phi+><Phi+| + (1 - r) I / N^2``, entry by entry.

    Accepts either a :class:`WernerSpec` or ``werner(N, r)``. Any real ``r``
    is accepted; whether the result is a legitimate state is for
    :func:`validate_state` to say.
    """
    if not isinstance(spec, WernerSpec):
        spec = WernerSpec(N=int(spec), r=float(r))
    N, r = spec.N, float(spec.r)
    m = np.eye(N * N, dtype=complex) * ((1.0 - r) / N**2)
    diag = np.arange(N) * (N + 1)
    m[np.ix_(diag, diag)] += r / N
    return DensityLike(N, 2, m, hermitian_hint=True)


def partial_trace(rho: DensityLike, which: int = 2) -> DensityLike:
    """Trace out particle ``which`` (1 or 2), returning the other particle's operator."""
    if rho.particles != 2:
        raise NotTwoParticle("partial_trace needs a two-particle operator")
    t = rho.tensor()
    if which == 2:
        red = np.einsum("ijkj->ik", t)
    elif which == 1:
        red = np.einsum("ijil->jl", t)
    else:
        raise ValueError(f"which must be 1 or 2, got {which!r}")
    return DensityLike(rho.N, 1, red, hermitian_hint=rho.hermitian_hint)


@dataclass(frozen=True)
class ValidationReport:
    hermitian: bool
    unit_trace: bool
    psd: bool
    min_eigenvalue: float | None

    @property
    def bona_fide(self) -> bool:
        return self.hermitian and self.unit_trace and self.psd

    def to_dict(self) -> dict:
        return {
            "hermitian": self.hermitian,
            "unit_trace": self.unit_trace,
            "psd": self.psd,
            "min_eigenvalue": self.min_eigenvalue,
            "bona_fide": self.bona_fide,
        }


def validate_state(rho: DensityLike, tol: float = qmat.DEFAULT_TOL) -> ValidationReport:
    """Report Hermiticity, unit trace and positivity; never raises on bad input.

    ``min_eigenvalue`` is ``None`` when the operator is not Hermitian, since
    the spectrum is then not real.
    """
    hermitian = qmat.is_hermitian(rho.mat, tol)
    unit_trace = abs(rho.trace() - 1.0) <= tol
    if not hermitian:
        return ValidationReport(False, unit_trace, False, None)
    lam = float(qmat.hermitian_eigenvalues(rho.mat, tol)[0])
    return ValidationReport(True, unit_trace, lam >= -tol, lam)
