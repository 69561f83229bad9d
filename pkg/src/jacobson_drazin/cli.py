"""Command-line front end.

Every command prints exactly one JSON document on stdout; diagnostics go to
stderr.  Exit codes: 0 verified, 1 input error, 2 property false,
3 internal contradiction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .drazin import core_nilpotent, drazin_axioms, drazin_from_decomposition
from .exact_linalg import DimensionError, MatrixFormatError, RatMatrix, loads_matrix
from .extensions import reference_example
from .fuzz import TARGETS, run_campaign
from .gnsd import NotGnsd, gnsd_check, gnsd_check_poly, gnsd_check_spectral
from .jacobson import transfer_witness

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FALSE = 2
EXIT_CONTRADICTION = 3


class InputError(Exception):
    pass


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _read_matrix(path: str, *, square: bool = True) -> RatMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        A = loads_matrix(text)
    except MatrixFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    if square and not A.is_square():
        raise InputError(f"{path}: expected a square matrix, got {A.rows}x{A.cols}")
    return A


def cmd_drazin(args) -> int:
    A = _read_matrix(args.file)
    dec = core_nilpotent(A)
    AD = drazin_from_decomposition(dec)
    axioms = drazin_axioms(A, AD, dec.index)
    _emit({
        "command": "drazin",
        "input": A.to_json_obj(),
        "index": dec.index,
        "core_dim": dec.core_dim,
        "drazin_inverse": AD.to_json_obj(),
        "spectral_idempotent": (A @ AD).to_json_obj(),
        "axioms": axioms,
    })
    return EXIT_OK if all(axioms.values()) else EXIT_CONTRADICTION


def cmd_gnsd(args) -> int:
    A = _read_matrix(args.file)
    n = args.n
    report = {"command": "gnsd", "input": A.to_json_obj(), "n": n}
    try:
        w = gnsd_check(A, n)
        witness_ok = True
        report["witness"] = {
            "inverse_x": w.inverse_x.to_json_obj(),
            "idempotent_e": w.idempotent_e.to_json_obj(),
            "nilpotency_degree": w.nilpotency_degree,
        }
    except NotGnsd as exc:
        witness_ok = False
        report["refutation"] = {"power": exc.power, "evidence": exc.evidence.to_json_obj()}
    verdicts = {"witness": witness_ok, "spectral": gnsd_check_spectral(A, n), "poly": gnsd_check_poly(A, n)}
    report["verdicts"] = verdicts
    agree = len(set(verdicts.values())) == 1
    report["gnsd"] = witness_ok if agree else None
    _emit(report)
    if not agree:
        print("checkers disagree: " + json.dumps(verdicts), file=sys.stderr)
        return EXIT_CONTRADICTION
    return EXIT_OK if witness_ok else EXIT_FALSE


def cmd_transfer(args) -> int:
    a = _read_matrix(args.file_a)
    b = _read_matrix(args.file_b)
    if a.shape != b.shape:
        raise InputError(f"matrices must have equal size, got {a.shape} and {b.shape}")
    try:
        cert = transfer_witness(a, b, args.n, strict=False)
    except NotGnsd as exc:
        _emit({
            "command": "transfer",
            "n": args.n,
            "a": a.to_json_obj(),
            "b": b.to_json_obj(),
            "not_gnsd": {"power": exc.power, "evidence": exc.evidence.to_json_obj()},
        })
        print(f"I - ab is not generalized {args.n}-strongly Drazin invertible", file=sys.stderr)
        return EXIT_FALSE
    _emit({"command": "transfer", **cert.to_json_obj()})
    if not cert.ok:
        failed = [k for k, v in cert.verdicts.items() if not v]
        print("verdicts failed: " + ", ".join(failed), file=sys.stderr)
        return EXIT_CONTRADICTION
    return EXIT_OK


def cmd_fuzz(args) -> int:
    summary = run_campaign(args.target, args.dim, args.n, args.trials, args.seed, jobs=args.jobs)
    _emit({"command": "fuzz", **summary})
    if summary["failed"]:
        print(f"{summary['failed']} failing trial(s); first failing seed {summary['first_failing_seed']}", file=sys.stderr)
        return EXIT_CONTRADICTION
    return EXIT_OK


def cmd_reference_example(args) -> int:
    report = reference_example()
    _emit({"command": "paper-example", **report})
    if not report["ok"]:
        print("failed claims: " + "; ".join(report["failed"]), file=sys.stderr)
        return EXIT_CONTRADICTION
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drazin-gnsd", description="Exact Drazin / gnsD checks and transfer certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("drazin", help="Drazin inverse, index and spectral idempotent")
    p.add_argument("file")
    p.set_defaults(func=cmd_drazin)

    p = sub.add_parser("gnsd", help="decide gnsD with three independent checkers")
    p.add_argument("file")
    p.add_argument("--n", type=_positive, default=1)
    p.set_defaults(func=cmd_gnsd)

    p = sub.add_parser("transfer", help="certificate for I - ba from I - ab")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--n", type=_positive, default=1)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("fuzz", help="seeded fuzz campaign against one verifier")
    p.add_argument("--dim", type=_positive, default=4)
    p.add_argument("--n", type=_positive, default=2)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--seed", type=_seed, default=None, help="base seed (default: $DRAZIN_SEED or 0)")
    p.add_argument("--target", choices=TARGETS, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("paper-example", help="recheck the fixed 4x4 reference quadruple")
    p.set_defaults(func=cmd_reference_example)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) is None:
        try:
            args.seed = _seed(os.environ.get("DRAZIN_SEED", "0"))
        except (ValueError, argparse.ArgumentTypeError):
            print("DRAZIN_SEED must be an unsigned 64-bit integer", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
