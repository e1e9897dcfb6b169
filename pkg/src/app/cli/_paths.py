"""Shared path resolution for the command line (project root, output directory, run stems)."""

import os
from pathlib import Path
from typing import Optional

# Project root = repo root (parent of src)
_SRC_DIR = Path(__file__).resolve().parent.parent.parent
PROJECT_ROOT = _SRC_DIR.parent


def project_path(*parts: str) -> str:
    return str(PROJECT_ROOT.joinpath(*parts))


def _output_base_from_config() -> str:
    """Base output dir from config (paths.output_dir), project-relative."""
    try:
        from commons.config import config, section
        from commons.constants import Constants as Co
        base = section(config, Co.PATHS).get("output_dir")
        if base:
            return base
    except Exception:
        pass
    return "outputs"


def output_dir(out_dir: Optional[str] = None) -> str:
    """--out-dir as given (absolute or cwd-relative), else the configured base under the project root."""
    if out_dir:
        return os.path.abspath(out_dir)
    base = _output_base_from_config()
    if os.path.isabs(base):
        return base
    return project_path(*base.split("/"))


def run_file(out_dir: str, stem: str, suffix: str) -> str:
    """e.g. run_file(d, "burst", ".meta.json") -> d/burst.meta.json"""
    return os.path.join(out_dir, stem + suffix)


def stem_of(csv_path: str) -> str:
    name = os.path.basename(csv_path)
    return name[: -len(".csv")] if name.endswith(".csv") else os.path.splitext(name)[0]
