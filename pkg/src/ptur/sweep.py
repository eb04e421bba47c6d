"""Werner-state parameter sweep behind the ``werner-scan`` command."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass
from typing import Sequence

import numpy as np

from .witness import NUMERIC_MAX_N, VERDICT_TOL, werner_verdict

HEADER = ("N", "r", "f", "r0", "ur_verdict", "negativity", "ppt_entangled")


@dataclass(frozen=True)
class SweepRow:
    N: int
    r: float
    f: float | None
    r0: float | None
    ur_verdict: str
    negativity: float
    ppt_entangled: bool


def r_grid(r_min: float, r_max: float, steps: int) -> np.ndarray:
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if not 0.0 <= r_min <= r_max <= 1.0:
        raise ValueError(f"need 0 <= r_min <= r_max <= 1, got [{r_min}, {r_max}]")
    return np.linspace(r_min, r_max, steps)


def _row(N: int, r: float, tol: float, numeric_max_n: int) -> SweepRow:
    v = werner_verdict(N, r, tol=tol, numeric_max_n=numeric_max_n)
    return SweepRow(v.N, v.r, v.f, v.r0, v.ur_verdict.value, v.negativity, v.ppt_entangled)


def werner_scan(
    Ns: Sequence[int],
    r_min: float = 0.0,
    r_max: float = 1.0,
    steps: int = 201,
    tol: float = VERDICT_TOL,
    jobs: int = 1,
    numeric_max_n: int = NUMERIC_MAX_N,
) -> list[SweepRow]:
    """Rows ordered by N (as given, de-duplicated and sorted) then ascending r.

    Each row is a pure function of ``(N, r)``, so ``jobs`` only changes how
    fast the list fills, never its contents.
    """
    Ns = sorted({int(n) for n in Ns})
    if not Ns or Ns[0] < 2:
        raise ValueError("every N must be >= 2")
    rs = r_grid(r_min, r_max, steps)
    points = [(N, float(r)) for N in Ns for r in rs]
    if jobs <= 1:
        return [_row(N, r, tol, numeric_max_n) for N, r in points]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda pt: _row(pt[0], pt[1], tol, numeric_max_n), points))


def rows_as_tuples(rows: Sequence[SweepRow]):
    return (astuple(row) for row in rows)
