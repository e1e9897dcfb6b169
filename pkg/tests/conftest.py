"""Pytest fixtures and configuration. Run from project root with: PYTHONPATH=src pytest tests/ -v"""

import math
import os
import sys
from pathlib import Path

import pytest

# Ensure src is on path so imports like commons.*, entity.* work
PROJECT_ROOT = Path(__file__).resolve().parent.parent
SRC = PROJECT_ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

# Optional: set working directory so relative paths in config resolve
os.chdir(PROJECT_ROOT)

from app.dynamics.integrator import integrate  # noqa: E402
from entity.states import ComplexTriadState, CoupledState, RealTriadState  # noqa: E402

TIGHT = dict(rtol=1e-12, atol=1e-14)


@pytest.fixture(scope="session")
def period_run():
    """Real triad (2, 1, -1) from (1, 1, 0): enstrophy oscillates between 5 and 7."""
    return integrate("real", RealTriadState(1.0, 1.0, 0.0, 2.0, 1.0, -1.0), 3.0, **TIGHT)


@pytest.fixture(scope="session")
def h3_burst_run():
    """(50, 1, -49) with lambda^6 p0^2 = mu^6 q0^2 = 1/2."""
    half = math.sqrt(0.5)
    state = RealTriadState(half / 50.0 ** 3, half, 0.0, 50.0, 1.0, -49.0)
    return integrate("real", state, 0.6, **TIGHT)


@pytest.fixture(scope="session")
def enstrophy_burst_run():
    """(50, 1, -49) with lambda^2 p0^2 = mu^2 q0^2 = 1/2."""
    half = math.sqrt(0.5)
    state = RealTriadState(half / 50.0, half, 0.0, 50.0, 1.0, -49.0)
    return integrate("real", state, 0.3, **TIGHT)


@pytest.fixture(scope="session")
def complex_run():
    state = ComplexTriadState((0.3 + 0.1j, 1.0 + 0.2j, 0.1 - 0.4j), (2.0, 1.0, -1.0))
    return integrate("complex", state, 20.0, **TIGHT)


@pytest.fixture(scope="session")
def coupled_run():
    """Coupled system started on the E2 = 0 cone."""
    state = CoupledState((1.0, 1.0, math.sqrt(3.0) / 2.0, 0.5, 0.3), (1.0, -1.0, 2.0, -2.0, 3.0))
    return integrate("coupled", state, 20.0, **TIGHT)
