"""
Run artifacts: trajectory CSV, metadata sidecar, and reloading both for analysis.

<stem>.csv        t, state components, monitored invariants (full precision)
<stem>.meta.json  system, parameters, tolerances, initial condition, column list
"""

import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.cli._paths import run_file, stem_of
from app.dynamics.systems import get_system
from commons.constants import Constants as Co
from commons.errors import DomainError, MissingColumnsError, UsageError
from commons.file_utils import FileUtils
from entity.trajectory import Trajectory


def trajectory_table(traj: Trajectory, sampled_only: bool = False) -> Tuple[List[str], List[List[float]]]:
    """Header and rows: accepted steps, or only the sampling-grid landings."""
    names = list(traj.invariants)
    header = ["t", *traj.labels, *names]
    idx = np.nonzero(traj.sample_mask)[0] if sampled_only else np.arange(len(traj))
    rows = []
    for i in idx:
        rows.append([float(traj.times[i]), *(float(x) for x in traj.states[i]), *(float(traj.invariants[n][i]) for n in names)])
    return header, rows


def write_trajectory(traj: Trajectory, out_dir: str, stem: str, meta: Dict[str, Any], quiet: bool = False) -> Dict[str, str]:
    sampled_only = bool(meta.get("sampled"))
    header, rows = trajectory_table(traj, sampled_only)
    csv_path = run_file(out_dir, stem, ".csv")
    meta_path = run_file(out_dir, stem, ".meta.json")
    FileUtils.write_csv_to_file(header, rows, csv_path, quiet=quiet)
    FileUtils.write_json_to_file({**meta, "columns": header, "rows": len(rows)}, meta_path, quiet=quiet)
    return {"csv": csv_path, "meta": meta_path}


def load_trajectory(csv_path: str) -> Tuple[Trajectory, Dict[str, Any]]:
    """
    Rebuild a Trajectory from a CSV and its sidecar.

    Derivatives and invariants are recomputed from the states, so refinement of extrema
    works on the exact vector field.
    """
    meta_path = run_file(os.path.dirname(os.path.abspath(csv_path)), stem_of(csv_path), ".meta.json")
    if not os.path.exists(csv_path):
        raise UsageError(f"trajectory file not found: {csv_path}")
    if not os.path.exists(meta_path):
        raise UsageError(f"metadata sidecar not found: {meta_path}")
    meta = FileUtils.load_json_from_file(meta_path)
    columns = FileUtils.load_csv_columns(csv_path)

    s_list = sorted({float(s) for s in meta.get("s_list", [3.0])} | {3.0})
    system = get_system(meta["system"]).from_params(meta["params"], s_list)
    required = ["t", *system.labels]
    missing = [c for c in required if c not in columns]
    if missing:
        raise MissingColumnsError(f"missing columns: {', '.join(missing)}", missing=missing)
    try:
        times = np.array([float(x) for x in columns["t"]])
        Y = np.column_stack([[float(x) for x in columns[c]] for c in system.labels])
    except ValueError as e:
        raise UsageError(f"malformed trajectory file {csv_path}: {e}") from e
    if times.size == 0:
        raise DomainError("trajectory file has no rows")
    traj = Trajectory(
        system_id=system.system_id,
        labels=system.labels,
        params=system.params,
        times=times,
        states=Y,
        derivatives=np.array([system.rhs(y) for y in Y]),
        sample_mask=np.full(times.shape, bool(meta.get("sampled"))),
        invariants=system.invariants(Y),
        stats={"source": csv_path},
    )
    return traj, meta


def run_meta(cfg, y0: Sequence[float], system_params: Dict[str, Any], sample_dt: Optional[float]) -> Dict[str, Any]:
    return {
        Co.SCHEMA: Co.SCHEMA_VERSION,
        "system": cfg.system,
        "params": system_params,
        "lambdas": list(cfg.lambdas),
        "couplings": cfg.couplings.model_dump(),
        "rtol": cfg.rtol,
        "atol": cfg.atol,
        "t_end": cfg.t_end,
        "sample_dt": sample_dt,
        "sampled": cfg.output.csv_dt is not None,
        "renormalize": cfg.renormalize,
        "s_list": list(cfg.s_list),
        "initial_condition": cfg.initial_condition.model_dump(exclude_none=True),
        "initial_state": [float(x) for x in y0],
    }
