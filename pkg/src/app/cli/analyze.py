"""`analyze burst|period|hamiltonian TRAJECTORY.csv`: closed-form comparisons on a saved run."""

import os
from typing import Any, Dict

import numpy as np

from app.cli._paths import run_file, stem_of
from app.cli.outputs import load_trajectory
from app.closed_form.bursts import ENSTROPHY, H3, burst_bounds_enstrophy, burst_bounds_h3, measure_burst, measure_period
from app.closed_form.cubic import cubic_data_from_invariants
from app.closed_form.hamiltonian import hamiltonian_segments
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import UsageError
from commons.file_utils import FileUtils
from entity.trajectory import Trajectory


def analyze_burst(traj: Trajectory, meta: Dict[str, Any], kind: str = None) -> Dict[str, Any]:
    if kind is None:
        kind = ENSTROPHY if (meta.get("initial_condition") or {}).get("recipe") == Co.ENSTROPHY_SPLIT else H3
    lam, mu, nu = (float(x) for x in traj.params["lambdas"])
    if kind == H3:
        bounds = burst_bounds_h3(lam, mu, nu, float(traj.invariants["W_3"][0]))
        return measure_burst(traj, bounds).to_dict()
    E0, H0 = float(traj.invariants["E"][0]), float(traj.invariants["H"][0])
    bounds = burst_bounds_enstrophy(lam, mu, nu, float(traj.invariants["Xi"][0]))
    return measure_burst(traj, bounds, cubic_data_from_invariants(E0, H0, lam, mu, nu)).to_dict()


def analyze_period(traj: Trajectory) -> Dict[str, Any]:
    report = measure_period(traj)
    tol = float(section(config, Co.CLOSED_FORM).get("extremum_rel_tol", 1e-6))
    c = report.cubic
    checks = {
        "half_period_rel_err": abs(report.ratio_measured - 1.0),
        "xi_min_rel_err": abs(report.xi_min - c.x_zero) / abs(c.x_zero),
        "xi_max_rel_err": abs(report.xi_max - c.x_plus) / abs(c.x_plus),
        "tolerance": tol,
    }
    out = report.to_dict()
    out["checks"] = checks
    out["pass"] = all(v <= tol for k, v in checks.items() if k != "tolerance")
    return out


def analyze_hamiltonian(traj: Trajectory) -> Dict[str, Any]:
    segments = hamiltonian_segments(traj)
    tol = float(section(config, Co.CLOSED_FORM).get("hamiltonian_slack", 1e-6))
    max_drift = max((s.max_drift for s in segments), default=0.0)
    E2 = traj.invariants["E2"]
    return {
        Co.SCHEMA: Co.SCHEMA_VERSION,
        "segments": [s.to_dict() for s in segments],
        "max_drift": max_drift,
        "tolerance": tol,
        "E2_initial": float(E2[0]),
        "E2_max_abs": float(np.abs(E2).max()),
        "pass": max_drift <= tol,
    }


def cmd_analyze(args) -> int:
    traj, meta = load_trajectory(args.trajectory)
    out_dir = os.path.abspath(args.out_dir) if args.out_dir else os.path.dirname(os.path.abspath(args.trajectory))
    stem = stem_of(args.trajectory)
    print(f"🔬 analyze {args.kind}: {args.trajectory} ({len(traj)} rows)")

    if args.kind == "burst":
        report = analyze_burst(traj, meta, getattr(args, "burst_kind", None))
    elif args.kind == "period":
        report = analyze_period(traj)
    elif args.kind == "hamiltonian":
        report = analyze_hamiltonian(traj)
        if args.format == "csv":
            header = ["t_start", "t_end", "samples", "c1", "c2", "value", "max_drift"]
            rows = [
                [s["t_start"], s["t_end"], s["samples"], *s["branch"], s["value"], s["max_drift"]]
                for s in report["segments"]
            ]
            FileUtils.write_csv_to_file(header, rows, run_file(out_dir, stem, ".hamiltonian.csv"))
    else:
        raise UsageError(f"unknown analysis {args.kind!r}")

    FileUtils.write_json_to_file(report, run_file(out_dir, stem, f".{args.kind}.json"))
    print(f"{'✅' if report.get('pass') else '❌'} pass={report.get('pass')}")
    return 0
