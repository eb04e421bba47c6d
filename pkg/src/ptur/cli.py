"""Command-line front end.

Exit codes: 0 success / relation satisfied, 2 usage or domain error,
3 relation violated, 4 inconclusive, 5 structural failure (non-Hermitian
input where Hermiticity is required, failed internal cross-check).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as qio
from .errors import (
    ConsistencyError,
    NonRealVariance,
    NotHermitian,
    NotHermitianSource,
    PturError,
)
from .states import maximally_mixed, phi_plus, validate_state, werner
from .sweep import HEADER, rows_as_tuples, werner_scan
from .transforms import momentum_distribution, partial_transpose_1, wigner
from .witness import Verdict, negativity_oracle, ppt_verdict, ur_check

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATED = 3
EXIT_INCONCLUSIVE = 4
EXIT_STRUCTURAL = 5

_STRUCTURAL = (NonRealVariance, NotHermitian, NotHermitianSource, ConsistencyError)


def default_tol() -> float:
    raw = os.environ.get("QW_TOL")
    if raw is None:
        return 1e-9
    try:
        return float(raw)
    except ValueError:
        raise SystemExit(f"QW_TOL must be a number, got {raw!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _emit_csv(path: str | None, header, rows) -> None:
    fh, close = _open_out(path)
    try:
        qio.write_csv(fh, header, rows)
    finally:
        if close:
            fh.close()


def cmd_state_make(args) -> int:
    if args.kind == "werner":
        if args.r is None:
            raise ValueError("werner states need --r")
        rho = werner(args.N, args.r)
        meta = {"kind": "werner", "r": qio.fmt(args.r)}
    elif args.kind == "phi-plus":
        rho = phi_plus(args.N)
        meta = {"kind": "phi-plus"}
    else:
        rho = maximally_mixed(args.N, args.particles)
        meta = {"kind": "mixed"}
    report = validate_state(rho, args.tol)
    if not report.psd:
        print(
            f"warning: state is not PSD (min eigenvalue {report.min_eigenvalue:.6g})",
            file=sys.stderr,
        )
    qio.write_state(args.out, rho, meta)
    return EXIT_OK


def cmd_state_validate(args) -> int:
    rho, _ = qio.read_state(args.state)
    _print_json(validate_state(rho, args.tol).to_dict())
    return EXIT_OK


def cmd_ptranspose(args) -> int:
    rho, meta = qio.read_state(args.state)
    pt = partial_transpose_1(rho)
    meta = dict(meta)
    meta["partial_transpose"] = "false" if meta.get("partial_transpose") == "true" else "true"
    qio.write_state(args.out, pt, meta)
    return EXIT_OK


def cmd_ur_check(args) -> int:
    rho, _ = qio.read_state(args.state)
    report = ur_check(rho, args.tol)
    _print_json(report.to_dict())
    return {
        Verdict.SATISFIED: EXIT_OK,
        Verdict.VIOLATED: EXIT_VIOLATED,
        Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[report.verdict]


def cmd_werner_scan(args) -> int:
    rows = werner_scan(
        args.N,
        r_min=args.r_min,
        r_max=args.r_max,
        steps=args.steps,
        tol=args.tol,
        jobs=args.jobs,
        numeric_max_n=args.numeric_max_n,
    )
    _emit_csv(args.out, HEADER, rows_as_tuples(rows))
    return EXIT_OK


def cmd_wigner(args) -> int:
    rho, _ = qio.read_state(args.state)
    table = wigner(rho)
    _emit_csv(args.out, qio.wigner_header(table), qio.wigner_rows(table))
    return EXIT_OK


def cmd_momentum_jpd(args) -> int:
    rho, _ = qio.read_state(args.state)
    jpd = momentum_distribution(rho)
    _emit_csv(args.out, qio.jpd_header(jpd), qio.jpd_rows(jpd))
    return EXIT_OK


def cmd_negativity(args) -> int:
    rho, _ = qio.read_state(args.state)
    _print_json({"negativity": negativity_oracle(rho, args.tol)})
    return EXIT_OK


def cmd_ppt(args) -> int:
    rho, _ = qio.read_state(args.state)
    v = ppt_verdict(rho, args.tol)
    _print_json({"min_pt_eigenvalue": v.min_pt_eigenvalue, "entangled": v.entangled})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    tol = default_tol()
    parser = argparse.ArgumentParser(
        prog="ptur",
        description="Partial transposition and uncertainty-relation entanglement tests for qudit pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_tol(p):
        p.add_argument("--tol", type=float, default=tol, help=f"tolerance (default {tol:g}, env QW_TOL)")
        return p

    state = sub.add_parser("state", help="build or inspect state files")
    state_sub = state.add_subparsers(dest="state_command", required=True)
    make = with_tol(state_sub.add_parser("make", help="write a state file"))
    make.add_argument("kind", choices=["werner", "phi-plus", "mixed"])
    make.add_argument("--N", type=int, required=True)
    make.add_argument("--r", type=float)
    make.add_argument("--particles", type=int, choices=[1, 2], default=2, help="for 'mixed' only")
    make.add_argument("--out", required=True)
    make.set_defaults(func=cmd_state_make)
    validate = with_tol(state_sub.add_parser("validate", help="check Hermiticity, trace and positivity"))
    validate.add_argument("state")
    validate.set_defaults(func=cmd_state_validate)

    pt = sub.add_parser("ptranspose", help="transpose particle 1 in the coordinate basis")
    pt.add_argument("state")
    pt.add_argument("--out", required=True)
    pt.set_defaults(func=cmd_ptranspose)

    ur = with_tol(sub.add_parser("ur-check", help="test the uncertainty relation on a state file"))
    ur.add_argument("state")
    ur.set_defaults(func=cmd_ur_check)

    scan = with_tol(sub.add_parser("werner-scan", help="sweep Werner states over N and r"))
    scan.add_argument("--N", type=_int_list, required=True, help="comma-separated, e.g. 3,4,5")
    scan.add_argument("--r-min", type=float, default=0.0)
    scan.add_argument("--r-max", type=float, default=1.0)
    scan.add_argument("--steps", type=int, default=201)
    scan.add_argument("--jobs", type=int, default=1)
    scan.add_argument(
        "--numeric-max-n",
        type=int,
        default=20,
        help="cross-check closed forms against explicit matrices up to this N",
    )
    scan.add_argument("--out")
    scan.set_defaults(func=cmd_werner_scan)

    wig = sub.add_parser("wigner", help="dump the discrete Wigner function (odd prime N)")
    wig.add_argument("state")
    wig.add_argument("--out")
    wig.set_defaults(func=cmd_wigner)

    jpd = sub.add_parser("momentum-jpd", help="dump the momentum distribution")
    jpd.add_argument("state")
    jpd.add_argument("--out")
    jpd.set_defaults(func=cmd_momentum_jpd)

    neg = with_tol(sub.add_parser("negativity", help="negativity from the partial-transpose spectrum"))
    neg.add_argument("state")
    neg.set_defaults(func=cmd_negativity)

    ppt = with_tol(sub.add_parser("ppt", help="positive-partial-transpose test"))
    ppt.add_argument("state")
    ppt.set_defaults(func=cmd_ppt)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _STRUCTURAL as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except (PturError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
