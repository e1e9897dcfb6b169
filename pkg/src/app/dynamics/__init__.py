"""Resonant systems, their adaptive integrator and trajectory post-processing."""

from app.dynamics.base import ResonantSystem
from app.dynamics.systems import (
    SYSTEM_REGISTRY,
    ComplexTriadSystem,
    CoupledSystem,
    RealTriadSystem,
    get_system,
    register_system,
    rhs_complex,
    rhs_coupled,
    rhs_real,
    system_from_trajectory,
)
from app.dynamics.integrator import dp_step, integrate, integrate_system
from app.dynamics.equilibria import classify_coupled_equilibrium, classify_equilibria
from app.dynamics.sampling import first_passage, locate_extrema, resample, reversibility_error, uniform_samples

__all__ = [
    "ResonantSystem",
    "SYSTEM_REGISTRY",
    "RealTriadSystem",
    "ComplexTriadSystem",
    "CoupledSystem",
    "get_system",
    "register_system",
    "system_from_trajectory",
    "rhs_complex",
    "rhs_real",
    "rhs_coupled",
    "dp_step",
    "integrate",
    "integrate_system",
    "classify_equilibria",
    "classify_coupled_equilibrium",
    "resample",
    "uniform_samples",
    "locate_extrema",
    "first_passage",
    "reversibility_error",
]
