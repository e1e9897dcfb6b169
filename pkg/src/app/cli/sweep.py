"""`sweep CONFIG...`: independent simulate runs in a process pool."""

import json
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from app.cli._paths import output_dir
from app.cli.simulate import run_simulation
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import TriadLabError
from commons.file_utils import FileUtils
from entity.run_config import RunConfig


def _run_one(job) -> Dict[str, Any]:
    path, out_dir = job
    try:
        cfg = RunConfig.from_file(path, {"out_dir": out_dir})
        return {"config": path, "exit_code": 0, "outputs": run_simulation(cfg, quiet=True)}
    except TriadLabError as e:
        # details may carry objects json cannot encode
        return {"config": path, "exit_code": e.exit_code, "error": json.loads(json.dumps(e.to_dict(), default=str))}


def run_sweep(configs: List[str], out_dir: Optional[str] = None, workers: Optional[int] = None) -> List[Dict[str, Any]]:
    """Results in input order; a failing run does not stop the others."""
    workers = int(section(config, Co.SWEEP).get("workers", 1) if workers is None else workers)
    jobs = [(path, out_dir) for path in configs]
    if workers <= 1 or len(jobs) == 1:
        return [_run_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))


def cmd_sweep(args) -> int:
    print(f"🧵 sweeping {len(args.configs)} config(s)")
    results = run_sweep(args.configs, args.out_dir, args.workers)
    for r in results:
        mark = "✅" if r["exit_code"] == 0 else "❌"
        print(f"{mark} {r['config']} (exit {r['exit_code']})")
    summary = {Co.SCHEMA: Co.SCHEMA_VERSION, "runs": results}
    FileUtils.write_json_to_file(summary, f"{output_dir(args.out_dir)}/sweep.summary.json")
    return max((r["exit_code"] for r in results), default=0)
