"""`triads search|curve|decompose`: lattice resonance from the command line."""

import os
from typing import List

import numpy as np

from app.cli._paths import output_dir
from app.lattice.algebra import decompose_primitive, irreducibility_det, primitive_checks
from app.lattice.quartic import resonance_curve
from app.lattice.resonance import search_triads
from commons.constants import Constants as Co
from commons.errors import ReducibleTriadError, UsageError
from commons.file_utils import FileUtils
from entity.lattice import LatticeParams, WaveVector


def parse_theta(text: str) -> LatticeParams:
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError as e:
        raise UsageError(f"malformed --theta {text!r}") from e
    if len(values) != 3:
        raise UsageError(f"--theta needs 3 values, got {len(values)}")
    if any(not v > 0 for v in values):
        raise UsageError(f"--theta values must be positive, got {values}")
    return LatticeParams(*values)


def parse_grid(text: str) -> List[float]:
    """'lo:hi:steps' -> steps points from lo to hi inclusive."""
    try:
        lo, hi, steps = text.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError as e:
        raise UsageError(f"malformed --grid {text!r}, expected lo:hi:steps") from e
    if not (0 < lo < hi) or steps < 2:
        raise UsageError(f"--grid needs 0 < lo < hi and steps >= 2, got {text!r}")
    return [float(x) for x in np.linspace(lo, hi, steps)]


def _target(args, default_name: str) -> str:
    if args.out:
        return os.path.abspath(args.out)
    return os.path.join(output_dir(args.out_dir), default_name)


def _search(args) -> int:
    params = parse_theta(args.theta)
    if args.box < 1:
        raise UsageError(f"--box must be >= 1, got {args.box}")
    print(f"🔎 searching resonant triads: theta={params.as_tuple()} box={args.box} tol={args.tol:g}")
    catalog = search_triads(params, args.box, args.tol, workers=args.workers)
    if args.format == "csv":
        header = ["k1", "k2", "k3", "m1", "m2", "m3", "n1", "n2", "n3", "s_n", "s_k", "s_m",
                  "lambda_k", "lambda_m", "lambda_n", "residual"]
        rows = [[*t.k.as_tuple(), *t.m.as_tuple(), *t.n.as_tuple(), *t.signs, *t.lambdas, t.residual]
                for t in catalog.entries]
        FileUtils.write_csv_to_file(header, rows, _target(args, "catalog.csv"))
    else:
        FileUtils.write_json_to_file(catalog.to_dict(), _target(args, "catalog.json"))
    print(f"✅ {len(catalog)} canonical triads")
    return 0


def _curve(args) -> int:
    k, m = WaveVector.parse(args.k), WaveVector.parse(args.m)
    n = k + m
    if args.n is not None and WaveVector.parse(args.n) != n:
        raise UsageError(f"--n must equal k + m = {n}")
    if irreducibility_det(k, m, n) == 0:
        raise ReducibleTriadError("reducible: zero determinant", k=str(k), m=str(m))
    points = resonance_curve(k, m, parse_grid(args.grid))
    FileUtils.write_csv_to_file(
        ["ratio2", "ratio3", "residual", "branch_flag"], [p.as_row() for p in points], _target(args, "curve.csv")
    )
    gaps = sum(p.branch_flag == "gap" for p in points)
    print(f"✅ {len(points) - gaps}/{len(points)} grid points on the curve")
    return 0


def _decompose(args) -> int:
    k, m = WaveVector.parse(args.k), WaveVector.parse(args.m)
    pair = decompose_primitive(k, m, args.i, args.j)
    doc = {Co.SCHEMA: Co.SCHEMA_VERSION, "k": list(k.as_tuple()), "m": list(m.as_tuple()),
           **pair.to_dict(), "checks": primitive_checks(pair)}
    FileUtils.write_json_to_file(doc, _target(args, "decomposition.json"))
    return 0


_ACTIONS = {"search": _search, "curve": _curve, "decompose": _decompose}


def cmd_triads(args) -> int:
    return _ACTIONS[args.action](args)
