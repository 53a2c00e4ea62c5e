"""Command-line front end: ``gen``, ``analyze``, ``sweep``, ``compare``.

Exit codes: 0 success, 1 validation error, 2 I/O error, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import linalg
from .correlations import MARG_TOL, compare_d, correlation_report
from .discord import OptimizerConfig, discord
from .linalg import DomainError, ValidationError, hermitian_function, validate_density
from .statefile import read_state, write_state
from .sweep import family_state, records_to_csv, run_sweep

EXIT_OK, EXIT_VALIDATION, EXIT_IO, EXIT_DOMAIN = 0, 1, 2, 3

TOL_KEYS = ("herm", "psd", "trace", "marg")


def _parse_tol(items):
    tol = {"herm": linalg.HERM_TOL, "psd": linalg.PSD_TOL, "trace": linalg.PROB_TOL, "marg": MARG_TOL}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or key not in TOL_KEYS:
            raise DomainError(f"--tol expects KEY=VALUE with KEY in {TOL_KEYS}, got {item!r}")
        tol[key] = float(value)
    return tol


def _load(path, tol):
    """Read and validate a state, then project it onto the exact density matrices.

    The projection only moves the matrix by amounts the tolerances already
    accepted, so downstream code can use its strict defaults.
    """
    mat, d_h, d_k = read_state(path)
    w = validate_density(mat, herm_tol=tol["herm"], psd_tol=tol["psd"], trace_tol=tol["trace"])
    mat = 0.5 * (mat + mat.conj().T)
    if w[0] < 0:
        mat = hermitian_function(mat, lambda x: np.clip(x, 0.0, None))
    return mat / np.trace(mat).real, (d_h, d_k)


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _cfg(args) -> OptimizerConfig:
    return OptimizerConfig(restarts=args.restarts, seed=args.seed)


def cmd_gen(args) -> int:
    mat = family_state(args.family, args.d, args.param)
    write_state(args.out, mat, args.d, args.d)
    return EXIT_OK


def cmd_analyze(args) -> int:
    tol = _parse_tol(args.tol)
    theta, dims = _load(args.state, tol)
    rep = correlation_report(theta, dims, psd_tol=tol["psd"])
    lines = [f"{k}={_fmt(v)}" for k, v in vars(rep).items()]
    if args.discord:
        cfg = _cfg(args)
        d_h = discord(theta, "H", cfg, dims)
        d_k = discord(theta, "K", cfg, dims)
        lines += [f"D_H={_fmt(d_h)}", f"D_K={_fmt(d_k)}", f"D_sym={_fmt(0.5 * (d_h + d_k))}"]
    print("\n".join(lines))
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _cfg(args) if args.discord else None
    records = run_sweep(args.family, args.d, args.param_min, args.param_max, args.steps, args.log, cfg)
    text = records_to_csv(records, with_discord=args.discord)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_compare(args) -> int:
    tol = _parse_tol(args.tol)
    a, dims_a = _load(args.state_a, tol)
    b, dims_b = _load(args.state_b, tol)
    if dims_a != dims_b:
        raise ValidationError(f"dimension mismatch: {dims_a} vs {dims_b}")
    order, d_a, d_b = compare_d(a, b, dims_a, marg_tol=tol["marg"])
    print(f"D_a={_fmt(d_a)}\nD_b={_fmt(d_b)}\nordering={order}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="optimizer seed")
    common.add_argument("--restarts", type=int, default=argparse.SUPPRESS, help="discord restarts")
    common.add_argument("--tol", action="append", default=argparse.SUPPRESS, metavar="KEY=VALUE",
                        help=f"tolerance override, KEY in {', '.join(TOL_KEYS)}")

    parser = argparse.ArgumentParser(prog="qcorr", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--restarts", type=int, default=32)
    parser.add_argument("--tol", action="append", default=[], metavar="KEY=VALUE")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family state to a JSON file")
    p.add_argument("--family", required=True, choices=["horodecki", "bell-eps"])
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--param", type=float, required=True)
    p.add_argument("--out", "-o", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", parents=[common], help="print the correlation report of a state file")
    p.add_argument("state")
    p.add_argument("--discord", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", parents=[common], help="sweep a family parameter and write CSV")
    p.add_argument("--family", required=True, choices=["horodecki", "bell-eps"])
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--param-min", type=float, required=True)
    p.add_argument("--param-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--log", action="store_true", help="log-spaced grid")
    p.add_argument("--discord", action="store_true")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", parents=[common], help="order two states by D-correlation")
    p.add_argument("state_a")
    p.add_argument("state_b")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
