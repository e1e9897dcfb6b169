"""Domain entities: lattice objects, dynamical states, trajectories, reports and run configs."""

from entity.lattice import LatticeParams, PrimitivePair, Triad, WaveVector
from entity.catalog import TriadCatalog
from entity.states import ComplexTriadState, CoupledState, RealTriadState
from entity.trajectory import Trajectory

__all__ = [
    "WaveVector",
    "LatticeParams",
    "Triad",
    "PrimitivePair",
    "TriadCatalog",
    "ComplexTriadState",
    "RealTriadState",
    "CoupledState",
    "Trajectory",
]
