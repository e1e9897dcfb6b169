"""
Triad Lab command line.

Every failure is reported as one JSON object on stderr and mapped to an exit code:
2 usage or config error, 3 domain or precondition error, 4 integration failure.
"""

import argparse
import json
import sys
from typing import List, Optional

from app.cli.analyze import cmd_analyze
from app.cli.simulate import cmd_simulate
from app.cli.sweep import cmd_sweep
from app.cli.triads import cmd_triads
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import TriadLabError, UsageError


class LabArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting, so errors share one path."""

    def error(self, message: str):
        raise UsageError(message, prog=self.prog)


EPILOG = """
Examples:
  # Resonant triads of the unit lattice in a box of half-width 3
  python src/app.py triads search --theta 1,1,1 --box 3 --tol 1e-12

  # theta3 along theta2/theta1 for one triad
  python src/app.py triads curve --k 1,2,3 --m 2,3,1 --grid 0.5:2:31

  # Primitive decomposition of a degenerate pair
  python src/app.py triads decompose --k 2,6,2 --m 5,1,-1 --i 1 --j 2

  # Integrate a run config, then compare with the closed forms
  python src/app.py simulate configs/h3_burst.json
  python src/app.py analyze burst outputs/h3_burst.csv
  python src/app.py analyze period outputs/enstrophy_period.csv
  python src/app.py analyze hamiltonian outputs/coupled_cone.csv

  # Several configs in parallel
  python src/app.py sweep configs/*.json --workers 4
"""


def _common(parser: argparse.ArgumentParser, root: bool = False) -> None:
    """Global flags, accepted before or after the subcommand; only the root sets defaults."""

    def default(value):
        return value if root else argparse.SUPPRESS

    parser.add_argument("--out-dir", default=default(None), help="Output directory (default: paths.output_dir from config)")
    parser.add_argument("--seedless", action="store_true", default=default(True),
                        help="Runs are deterministic; accepted for compatibility, always on")
    parser.add_argument("--format", choices=["json", "csv"], default=default("json"),
                        help="Format of tabular outputs where both apply")


def build_parser() -> LabArgumentParser:
    parser = LabArgumentParser(
        prog="triadlab",
        description="Triad Lab - resonant triads of rotating Euler flows",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    _common(parser, root=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=LabArgumentParser)

    # triads
    triads = sub.add_parser("triads", help="Lattice resonance: search, curve, decompose")
    triads_sub = triads.add_subparsers(dest="action", required=True, parser_class=LabArgumentParser)
    lattice_cfg = section(config, Co.LATTICE)

    search = triads_sub.add_parser("search", help="Enumerate canonical resonant triads in a box")
    _common(search)
    search.add_argument("--theta", required=True, help="theta1,theta2,theta3 (positive)")
    search.add_argument("--box", type=int, required=True, help="Half-width N of the search box")
    search.add_argument("--tol", type=float, default=lattice_cfg.get("search_tol", 1e-12), help="Residual tolerance")
    search.add_argument("--workers", type=int, default=1, help="Process pool size")
    search.add_argument("--out", default=None, help="Catalog file (default: <out-dir>/catalog.json)")

    curve = triads_sub.add_parser("curve", help="Track theta3 against theta2/theta1")
    _common(curve)
    curve.add_argument("--k", required=True)
    curve.add_argument("--m", required=True)
    curve.add_argument("--n", default=None, help="Optional; must equal k + m")
    curve.add_argument("--grid", required=True, help="lo:hi:steps for theta2/theta1")
    curve.add_argument("--out", default=None)

    decompose = triads_sub.add_parser("decompose", help="Primitive decomposition of a degenerate pair")
    _common(decompose)
    decompose.add_argument("--k", required=True)
    decompose.add_argument("--m", required=True)
    decompose.add_argument("--i", type=int, required=True, choices=[1, 2, 3])
    decompose.add_argument("--j", type=int, required=True, choices=[1, 2, 3])
    decompose.add_argument("--out", default=None)
    triads.set_defaults(handler=cmd_triads)

    # simulate
    simulate = sub.add_parser("simulate", help="Integrate one run config")
    _common(simulate)
    simulate.add_argument("config", help="Run config JSON")
    simulate.add_argument("--t-end", type=float, default=None, help="Override t_end")
    simulate.add_argument("--rtol", type=float, default=None)
    simulate.add_argument("--atol", type=float, default=None)
    simulate.set_defaults(handler=cmd_simulate)

    # analyze
    analyze = sub.add_parser("analyze", help="Closed-form comparisons on a saved trajectory")
    _common(analyze)
    analyze.add_argument("kind", choices=["burst", "period", "hamiltonian"])
    analyze.add_argument("trajectory", help="Trajectory CSV written by simulate")
    analyze.add_argument("--burst-kind", choices=["h3", "enstrophy"], default=None,
                         help="Burst functional (default: from the run's initial-condition recipe)")
    analyze.set_defaults(handler=cmd_analyze)

    # sweep
    sweep = sub.add_parser("sweep", help="Run several configs concurrently")
    _common(sweep)
    sweep.add_argument("configs", nargs="+")
    sweep.add_argument("--workers", type=int, default=None, help="Default: sweep.workers from config")
    sweep.set_defaults(handler=cmd_sweep)
    return parser


def _emit_error(err: TriadLabError) -> None:
    print(json.dumps({Co.SCHEMA: Co.SCHEMA_VERSION, **err.to_dict()}, default=str), file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return int(args.handler(args) or 0)
    except TriadLabError as e:
        _emit_error(e)
        return e.exit_code
