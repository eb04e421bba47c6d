"""State files (JSON) and table dumps (CSV).

Floats are written with 17 significant digits so a write/read/write cycle
reproduces the file byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import SchemaError
from .states import DensityLike
from .transforms import MomentumJPD, WignerTable

SCHEMA_VERSION = "1"


def fmt(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to serialize non-finite number {x!r}")
    # -0.0 would come back from JSON as integer 0 and break byte round trips.
    return format(x + 0.0, ".17g")


def state_to_dict(rho: DensityLike, metadata: dict[str, str] | None = None) -> dict:
    flat = rho.mat.ravel()
    return {
        "schema_version": SCHEMA_VERSION,
        "N": rho.N,
        "particles": rho.particles,
        "matrix": [[float(z.real), float(z.imag)] for z in flat],
        "metadata": {str(k): str(v) for k, v in (metadata or {}).items()},
    }


def state_from_dict(payload: dict) -> DensityLike:
    if not isinstance(payload, dict):
        raise SchemaError("state file must hold a JSON object")
    missing = {"schema_version", "N", "particles", "matrix"} - payload.keys()
    if missing:
        raise SchemaError(f"state file is missing fields: {sorted(missing)}")
    if payload["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {payload['schema_version']!r}")
    N, particles = payload["N"], payload["particles"]
    if not isinstance(N, int) or isinstance(N, bool) or N < 2:
        raise SchemaError(f"N must be an integer >= 2, got {N!r}")
    if particles not in (1, 2) or isinstance(particles, bool):
        raise SchemaError(f"particles must be 1 or 2, got {particles!r}")
    meta = payload.get("metadata", {})
    if not isinstance(meta, dict) or not all(isinstance(v, str) for v in meta.values()):
        raise SchemaError("metadata must be a map of strings")
    dim = N**particles
    entries = payload["matrix"]
    if not isinstance(entries, list) or len(entries) != dim * dim:
        raise SchemaError(f"matrix must hold {dim * dim} [re, im] pairs")
    try:
        arr = np.array(entries, dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"matrix entries must be numeric pairs: {exc}") from None
    if arr.shape != (dim * dim, 2):
        raise SchemaError("matrix entries must be [re, im] pairs")
    if not np.all(np.isfinite(arr)):
        raise SchemaError("matrix entries must be finite")
    mat = (arr[:, 0] + 1j * arr[:, 1]).reshape(dim, dim)
    return DensityLike(N=N, particles=particles, mat=mat)


def dumps_state(rho: DensityLike, metadata: dict[str, str] | None = None) -> str:
    """Serialize with one ``[re, im]`` pair per line."""
    d = state_to_dict(rho, metadata)
    pairs = ",\n    ".join(f"[{fmt(re)}, {fmt(im)}]" for re, im in d["matrix"])
    return (
        "{\n"
        f'  "schema_version": {json.dumps(d["schema_version"])},\n'
        f'  "N": {d["N"]},\n'
        f'  "particles": {d["particles"]},\n'
        f'  "metadata": {json.dumps(d["metadata"], sort_keys=True)},\n'
        f'  "matrix": [\n    {pairs}\n  ]\n'
        "}\n"
    )


def loads_state(text: str) -> tuple[DensityLike, dict[str, str]]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"state file is not valid JSON: {exc}") from None
    rho = state_from_dict(payload)
    return rho, dict(payload.get("metadata", {}))


def write_state(path: str, rho: DensityLike, metadata: dict[str, str] | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_state(rho, metadata))


def read_state(path: str) -> tuple[DensityLike, dict[str, str]]:
    with open(path, encoding="utf-8") as fh:
        return loads_state(fh.read())


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    return str(v)


def write_csv(fh: IO[str], header: Sequence[str], rows: Iterable[Sequence]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v) for v in row])


def wigner_rows(table: WignerTable):
    grid = np.indices(table.values.shape).reshape(table.values.ndim, -1).T
    for idx, w in zip(grid, table.flat()):
        yield (*idx.tolist(), float(w))


def wigner_header(table: WignerTable) -> list[str]:
    return ["q", "p", "w"] if table.particles == 1 else ["q1", "q2", "p1", "p2", "w"]


def jpd_rows(jpd: MomentumJPD):
    grid = np.indices(jpd.probs.shape).reshape(jpd.probs.ndim, -1).T
    for idx, prob in zip(grid, jpd.flat()):
        yield (*idx.tolist(), float(prob))


def jpd_header(jpd: MomentumJPD) -> list[str]:
    return ["p", "prob"] if jpd.particles == 1 else ["p1", "p2", "prob"]


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()
