"""Entanglement tests for pairs of N-level systems on a periodic lattice.

Partial transposition, momentum distributions, the discrete Wigner function,
an uncertainty-relation witness built from clock/shift operators, and the
Werner-state thresholds and negativity.
"""

from .errors import (
    ConsistencyError,
    DimensionMismatch,
    DimensionTooSmall,
    NonRealVariance,
    NotHermitian,
    NotHermitianSource,
    NotOddPrime,
    NotTwoParticle,
    PturError,
    SchemaError,
)
from .states import (
    DensityLike,
    WernerSpec,
    maximally_mixed,
    partial_trace,
    phi_plus,
    validate_state,
    werner,
)
from .transforms import (
    check_momentum_flip,
    check_wigner_flip,
    momentum_distribution,
    partial_transpose_1,
    wigner,
)
from .witness import (
    Verdict,
    f_werner,
    negativity_closed,
    negativity_oracle,
    ppt_verdict,
    r0_threshold,
    ur_check,
    werner_verdict,
)

__version__ = "0.1.0"
