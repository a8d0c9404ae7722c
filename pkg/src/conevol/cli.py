"""Command-line front end: point evaluation, sweeps, and verification.

Three subcommands:

``volume``
    Evaluate one (problem, method, k, alpha) point and print a record.
``sweep``
    Evaluate a Cartesian (k, alpha) grid, one record per point, in
    row-major order (k outer, alpha inner).  Deterministic: the same
    flags always produce byte-identical output.
``verify``
    Run the cross-method agreement suites and print a pass/fail table.

Records serialize to CSV (header always emitted) or, with ``--json``, to
newline-delimited JSON with identical field names.  Floats are printed
with 17 significant digits so parsing and re-emitting a record is
byte-identical.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
error (quadrature budget exhausted, or series truncation under
``--strict``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from dataclasses import astuple, dataclass, fields
from typing import Optional

import numpy as np

from . import cone_cylinder, cone_sphere, oracle
from . import verify as verify_suites
from .elliptic import DomainError
from .quadrature import QuadratureError

__all__ = ["RunRecord", "main"]

_CSV_HEADER = "problem,k,alpha_rad,method,volume,error_estimate,evaluations,seed,n_terms"

_METHODS = {
    "cone-cylinder": ("closed", "quad-r3", "quad-reduced", "mc"),
    "cone-sphere": ("series", "semi-analytic", "quad-2d", "mc", "zeroth"),
}


def _fmt(x: float) -> str:
    """Round-trip-safe float text: 17 significant digits."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class RunRecord:
    """One evaluated point, as serialized by the CLI."""

    problem: str
    k: float
    alpha_rad: float
    method: str
    volume: float
    error_estimate: float
    evaluations: int
    seed: Optional[int] = None
    n_terms: Optional[int] = None

    def to_csv_row(self) -> str:
        cells = []
        for value in astuple(self):
            if value is None:
                cells.append("")
            elif isinstance(value, float):
                cells.append(_fmt(value))
            else:
                cells.append(str(value))
        return ",".join(cells)

    def to_json_line(self) -> str:
        parts = []
        for field, value in zip(fields(self), astuple(self)):
            if value is None:
                text = "null"
            elif isinstance(value, float):
                text = _fmt(value)
            elif isinstance(value, str):
                text = json.dumps(value)
            else:
                text = str(value)
            parts.append(f'"{field.name}": {text}')
        return "{" + ", ".join(parts) + "}"

    @classmethod
    def from_csv_row(cls, row: str) -> "RunRecord":
        cells = row.rstrip("\n").split(",")
        if len(cells) != 9:
            raise ValueError(f"expected 9 CSV cells, got {len(cells)}")
        return cls(
            problem=cells[0],
            k=float(cells[1]),
            alpha_rad=float(cells[2]),
            method=cells[3],
            volume=float(cells[4]),
            error_estimate=float(cells[5]),
            evaluations=int(cells[6]),
            seed=int(cells[7]) if cells[7] else None,
            n_terms=int(cells[8]) if cells[8] else None,
        )

    @classmethod
    def from_json_line(cls, line: str) -> "RunRecord":
        return cls(**json.loads(line))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conevol",
        description="Volumes cut from a cylinder or a sphere by an offset cone.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--problem", required=True,
                       choices=("cone-cylinder", "cone-sphere"))
        p.add_argument("--method", required=True,
                       choices=("closed", "quad-r3", "quad-reduced", "series",
                                "semi-analytic", "quad-2d", "mc", "zeroth"))
        p.add_argument("--tol", type=float, default=None,
                       help="quadrature tolerance (default 1e-10) or series "
                            "term tolerance (default 1e-12)")
        p.add_argument("--terms", type=int, default=64,
                       help="series term cap (default 64)")
        p.add_argument("--samples", type=int, default=10_000_000,
                       help="Monte Carlo sample count (default 1e7)")
        p.add_argument("--seed", type=int, default=42,
                       help="Monte Carlo seed, unsigned 64-bit (default 42)")
        p.add_argument("--json", action="store_true",
                       help="emit newline-delimited JSON instead of CSV")
        p.add_argument("--strict", action="store_true",
                       help="treat series truncation as an error (exit 3)")

    vol = sub.add_parser("volume", help="evaluate a single (k, alpha) point")
    vol.add_argument("--k", type=float, required=True)
    angle = vol.add_mutually_exclusive_group(required=True)
    angle.add_argument("--alpha-deg", type=float)
    angle.add_argument("--alpha-rad", type=float)
    common_flags(vol)

    swp = sub.add_parser("sweep", help="evaluate a Cartesian (k, alpha) grid")
    swp.add_argument("--k-grid", required=True, metavar="START:STOP:COUNT")
    swp.add_argument("--alpha-grid", required=True, metavar="START:STOP:COUNT")
    swp.add_argument("--radians", action="store_true",
                     help="alpha grid is in radians (default degrees)")
    common_flags(swp)

    ver = sub.add_parser("verify", help="run cross-method agreement checks")
    ver.add_argument("--fast", action="store_true",
                     help="coarser grids and capped Monte Carlo samples")
    ver.add_argument("--samples", type=int, default=10_000_000)
    ver.add_argument("--seed", type=int, default=42)
    return parser


def _parse_grid(raw: str, parser: argparse.ArgumentParser, name: str):
    parts = raw.split(":")
    try:
        if len(parts) != 3:
            raise ValueError
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise ValueError
    except ValueError:
        parser.error(f"{name} must be START:STOP:COUNT with COUNT >= 1, got {raw!r}")
    return np.linspace(start, stop, count)


def _problem_tag(problem_flag: str) -> str:
    return problem_flag.replace("-", "_")


def _evaluate_point(problem: str, method: str, k: float, alpha: float,
                    args: argparse.Namespace) -> RunRecord:
    quad_tol = args.tol if args.tol is not None else 1e-10
    seed: Optional[int] = None
    n_terms: Optional[int] = None

    if problem == "cone-cylinder":
        params = cone_cylinder.ConeCylinderParams(k, alpha)
        if method == "closed":
            result = cone_cylinder.volume_closed(params)
        elif method == "quad-r3":
            result = cone_cylinder.volume_quad_r3(params, quad_tol)
        elif method == "quad-reduced":
            result = cone_cylinder.volume_quad_reduced(params, quad_tol)
        else:
            est = oracle.mc_volume(
                lambda pts: oracle.in_cone_cylinder_region(pts, params),
                oracle.cone_cylinder_box(params), args.samples, args.seed)
            seed = est.seed
            return RunRecord(_problem_tag(problem), k, alpha, method,
                             est.mean, est.std_error, est.samples, seed, None)
    else:
        params = cone_sphere.ConeSphereParams(k, alpha)
        if method == "series":
            term_tol = args.tol if args.tol is not None else 1e-12
            result, breakdown = cone_sphere.volume_series(
                params, term_tol=term_tol, n_max=args.terms)
            n_terms = breakdown.n_used
        elif method == "semi-analytic":
            result = cone_sphere.volume_semi_analytic(params, quad_tol)
        elif method == "quad-2d":
            tol_2d = args.tol if args.tol is not None else 1e-9
            result = cone_sphere.volume_quad_2d(params, tol_2d)
        elif method == "zeroth":
            value = cone_sphere.zeroth_order_approx(params)
            return RunRecord(_problem_tag(problem), k, alpha, method,
                             value, 0.0, 0, None, None)
        else:
            est = oracle.mc_volume(
                lambda pts: oracle.in_cone_sphere_region(pts, params),
                oracle.cone_sphere_box(params), args.samples, args.seed)
            return RunRecord(_problem_tag(problem), k, alpha, method,
                             est.mean, est.std_error, est.samples, est.seed, None)

    return RunRecord(_problem_tag(problem), k, alpha, method, result.volume,
                     result.error_estimate, result.evaluations, seed, n_terms)


def _emit(records, as_json: bool, out) -> None:
    if not as_json:
        out.write(_CSV_HEADER + "\n")
    for record in records:
        line = record.to_json_line() if as_json else record.to_csv_row()
        out.write(line + "\n")


def _check_method(parser: argparse.ArgumentParser, problem: str, method: str) -> None:
    if method not in _METHODS[problem]:
        parser.error(f"method '{method}' does not apply to problem '{problem}'; "
                     f"choose from {', '.join(_METHODS[problem])}")


def _cmd_volume(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_method(parser, args.problem, args.method)
    alpha = (args.alpha_rad if args.alpha_rad is not None
             else args.alpha_deg * math.pi / 180.0)
    record = _evaluate_point(args.problem, args.method, args.k, alpha, args)
    _emit([record], args.json, sys.stdout)
    return 0


def _cmd_sweep(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_method(parser, args.problem, args.method)
    k_grid = _parse_grid(args.k_grid, parser, "--k-grid")
    alpha_grid = _parse_grid(args.alpha_grid, parser, "--alpha-grid")
    if not args.radians:
        alpha_grid = alpha_grid * math.pi / 180.0

    def produce():
        for k in k_grid:
            for alpha in alpha_grid:
                yield _evaluate_point(args.problem, args.method,
                                      float(k), float(alpha), args)

    _emit(produce(), args.json, sys.stdout)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    rows = verify_suites.run_all(fast=args.fast, samples=args.samples,
                                 seed=args.seed)
    width = max(len(row.name) for row in rows)
    for row in rows:
        status = "pass" if row.passed else "FAIL"
        print(f"{row.name:<{width}}  {row.max_deviation:11.3e}  "
              f"{row.tolerance:9.1e}  {status}")
    failed = sum(not row.passed for row in rows)
    print(f"{len(rows) - failed}/{len(rows)} checks passed")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "verify":
            return _cmd_verify(args)
        with warnings.catch_warnings():
            if args.strict:
                warnings.simplefilter("error", cone_sphere.TruncationWarning)
            if args.command == "volume":
                return _cmd_volume(parser, args)
            return _cmd_sweep(parser, args)
    except SystemExit as exc:  # parser.error inside subcommands
        return int(exc.code or 0)
    except DomainError as exc:
        print(f"conevol: error: {exc}", file=sys.stderr)
        return 2
    except cone_sphere.TruncationWarning as exc:
        print(f"conevol: numerical error: {exc}", file=sys.stderr)
        return 3
    except QuadratureError as exc:
        print(f"conevol: numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
