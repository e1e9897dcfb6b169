"""
Triad Lab - resonant triads of the rotating 3D Euler equations.

Subcommands:
  - triads search|curve|decompose: integer-lattice resonances and their algebra.
  - simulate CONFIG: integrate a run config (real, complex or coupled system).
  - analyze burst|period|hamiltonian CSV: closed-form comparisons on a saved run.
  - sweep CONFIG...: several runs concurrently.

Outputs go to paths.output_dir from config.yaml unless --out-dir is given.

Usage:
    python src/app.py triads search --theta 1,1,1 --box 3
    python src/app.py simulate configs/period_2_1_-1.json
    python src/app.py analyze period outputs/period_2_1_-1.csv
"""

import os
import sys

# Add parent directory to path for imports
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), ".")))

from app.cli import main

if __name__ == "__main__":
    sys.exit(main())
