"""`simulate CONFIG`: integrate one run config and write its CSV, sidecar and report."""

import warnings
from typing import Any, Dict, List

from app.cli._paths import output_dir, run_file
from app.cli.initial_conditions import build_initial_state
from app.cli.outputs import run_meta, write_trajectory
from app.closed_form.bursts import burst_bounds_enstrophy, burst_bounds_h3, measure_burst
from app.closed_form.cubic import cubic_data_from_invariants
from app.dynamics.integrator import integrate
from app.dynamics.systems import get_system
from commons.constants import Constants as Co
from commons.errors import IntegrationFailure
from commons.file_utils import FileUtils
from entity.run_config import RunConfig
from entity.trajectory import Trajectory


def _s_list(cfg: RunConfig) -> List[float]:
    # W_3 is always monitored so burst analysis works on any real run
    return sorted({float(s) for s in cfg.s_list} | {3.0})


def _burst_section(cfg: RunConfig, traj: Trajectory) -> Dict[str, Any]:
    lam, mu, nu = cfg.lambdas
    if cfg.initial_condition.recipe == Co.H3_SPLIT:
        bounds = burst_bounds_h3(lam, mu, nu, float(traj.invariants["W_3"][0]))
        return measure_burst(traj, bounds).to_dict()
    E0, H0 = float(traj.invariants["E"][0]), float(traj.invariants["H"][0])
    bounds = burst_bounds_enstrophy(lam, mu, nu, float(traj.invariants["Xi"][0]))
    return measure_burst(traj, bounds, cubic_data_from_invariants(E0, H0, lam, mu, nu)).to_dict()


def build_report(cfg: RunConfig, traj: Trajectory, caught: List[warnings.WarningMessage]) -> Dict[str, Any]:
    drift = traj.drift()
    report: Dict[str, Any] = {
        Co.SCHEMA: Co.SCHEMA_VERSION,
        "system": cfg.system,
        "stem": cfg.output.stem,
        "t_end": traj.t_end,
        "steps": {k: traj.stats.get(k) for k in ("accepted", "rejected", "rhs_evals", "near_saddle_steps")},
        "drift": drift,
        "max_rel_drift": max((d["max_rel"] for d in drift.values()), default=0.0),
        "warnings": [{"category": w.category.__name__, "message": str(w.message)} for w in caught],
    }
    if cfg.system == Co.REAL and cfg.initial_condition.recipe in (Co.H3_SPLIT, Co.ENSTROPHY_SPLIT):
        report["burst"] = _burst_section(cfg, traj)
    return report


def run_simulation(cfg: RunConfig, quiet: bool = False) -> Dict[str, str]:
    """
    Integrate cfg and write <stem>.csv, <stem>.meta.json and <stem>.report.json.

    On IntegrationFailure the partial trajectory and <stem>.failure.json are written
    before the error propagates.
    """
    out_dir = output_dir(cfg.output.out_dir)
    stem = cfg.output.stem
    state = build_initial_state(cfg)
    s_list = _s_list(cfg)
    system, y0 = get_system(cfg.system).from_state(state, s_list)
    sample_dt = cfg.output.csv_dt or cfg.sample_dt
    meta = run_meta(cfg, y0, system.params, sample_dt)
    meta["s_list"] = s_list

    if not quiet:
        print(f"🌀 {cfg.system} run '{stem}': lambdas={list(cfg.lambdas)} t_end={cfg.t_end:g} rtol={cfg.rtol:g}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            traj = integrate(
                cfg.system, state, cfg.t_end, cfg.rtol, cfg.atol,
                sample_dt=sample_dt, renormalize=cfg.renormalize, s_list=s_list,
            )
        except IntegrationFailure as e:
            if e.trajectory is not None:
                write_trajectory(e.trajectory, out_dir, stem, {**meta, "partial": True}, quiet=quiet)
            failure = {
                Co.SCHEMA: Co.SCHEMA_VERSION,
                **e.to_dict(),
                "t_reached": e.trajectory.t_end if e.trajectory is not None else 0.0,
                "steps": dict(e.trajectory.stats) if e.trajectory is not None else {},
            }
            FileUtils.write_json_to_file(failure, run_file(out_dir, stem, ".failure.json"), quiet=quiet)
            raise
        report = build_report(cfg, traj, caught)

    for w in report["warnings"]:
        if not quiet:
            print(f"⚠️ {w['category']}: {w['message']}")
    paths = write_trajectory(traj, out_dir, stem, meta, quiet=quiet)
    paths["report"] = run_file(out_dir, stem, ".report.json")
    FileUtils.write_json_to_file(report, paths["report"], quiet=quiet)
    if not quiet:
        print(f"✅ {len(traj)} accepted steps, max relative drift {report['max_rel_drift']:.3e}")
    return paths


def cmd_simulate(args) -> int:
    overrides = {"out_dir": args.out_dir, "t_end": args.t_end, "rtol": args.rtol, "atol": args.atol}
    cfg = RunConfig.from_file(args.config, overrides)
    print("\n" + "=" * 60)
    print("🧪 Triad Lab - simulate")
    print("=" * 60)
    run_simulation(cfg)
    return 0
