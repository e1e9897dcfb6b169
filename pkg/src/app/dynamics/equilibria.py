"""Equilibria of the rigid-body and coupled systems, labeled from their linearization."""

from __future__ import annotations

import math
from typing import List, Sequence

import numpy as np

from app.dynamics.systems import CoupledSystem, RealTriadSystem
from commons.errors import DomainError
from entity.reports import Equilibrium


def _label(eigenvalues: np.ndarray, drop_zeros: int) -> str:
    """saddle / center / degenerate from eigenvalues, ignoring the drop_zeros smallest in modulus."""
    ev = sorted(eigenvalues, key=abs)[drop_zeros:]
    scale = max([abs(e) for e in ev] + [1.0])
    tol = 1e-10 * scale
    if any(e.real > tol for e in ev):
        return "saddle"
    if all(abs(e.real) <= tol for e in ev) and all(abs(e.imag) > tol for e in ev):
        return "center"
    return "degenerate"


def classify_equilibria(lambdas: Sequence[float], E: float) -> List[Equilibrium]:
    """
    The six axis equilibria of the rigid body on the sphere p^2 + q^2 + r^2 = E.

    lambdas must be strictly ordered lambda > mu > nu. One eigenvalue of the
    linearization is always zero (the direction along the family of equilibria) and
    is ignored for labeling.
    """
    lam, mu, nu = (float(x) for x in lambdas)
    if len({lam, mu, nu}) < 3:
        raise DomainError(f"lambdas must be pairwise distinct, got {(lam, mu, nu)}")
    if not lam > mu > nu:
        raise DomainError(f"lambdas must be ordered lambda > mu > nu, got {(lam, mu, nu)}")
    if not E > 0:
        raise DomainError(f"energy must be positive, got {E}")

    system = RealTriadSystem((lam, mu, nu))
    radius = math.sqrt(E)
    out: List[Equilibrium] = []
    for axis in range(3):
        for sign in (1.0, -1.0):
            point = np.zeros(3)
            point[axis] = sign * radius
            eig = np.linalg.eigvals(system.jacobian(point))
            out.append(Equilibrium(tuple(float(x) for x in point), _label(eig, 1), tuple(complex(e) for e in eig)))
    return out


def classify_coupled_equilibrium(
    lambdas: Sequence[float], gamma: float, gamma_tilde: float, a_k: float, a_kt: float
) -> Equilibrium:
    """
    Linearization of the coupled system at (a_k, 0, 0, 0, a_kt).

    The (a_m, a_n, a_mt) block carries the only nonzero eigenvalues +-sqrt(AB + CD), so
    the equilibrium is a saddle with a one-dimensional unstable manifold when AB + CD > 0.
    """
    system = CoupledSystem(lambdas, gamma, gamma_tilde)
    point = np.array([a_k, 0.0, 0.0, 0.0, a_kt], dtype=float)
    eig = np.linalg.eigvals(system.jacobian(point))
    return Equilibrium(tuple(float(x) for x in point), _label(eig, 3), tuple(complex(e) for e in eig))
