"""
Post-processing of trajectories: uniform resampling, extrema and level crossings of
monitored functionals, and the reversibility check.

Extrema and crossings are bracketed on accepted steps and then refined by re-taking a
partial Dormand-Prince step from the left node, so their accuracy is that of the
integrator rather than of an interpolant.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.interpolate import CubicHermiteSpline
from scipy.optimize import brentq

from app.dynamics.integrator import dp_step, integrate_system
from app.dynamics.systems import system_from_trajectory
from commons.errors import DomainError
from entity.reports import Extremum
from entity.trajectory import Trajectory


def resample(traj: Trajectory, dt: float) -> Tuple[np.ndarray, np.ndarray]:
    """Cubic Hermite interpolation of the states onto t = 0, dt, 2 dt, ... <= t_end."""
    if not dt > 0:
        raise DomainError(f"resampling step must be positive, got {dt}")
    if len(traj) < 2:
        raise DomainError("need at least two accepted steps to resample")
    spline = CubicHermiteSpline(traj.times, traj.states, traj.derivatives, axis=0)
    n = int(np.floor(traj.t_end / dt * (1 + 1e-12)))
    grid = dt * np.arange(n + 1)
    return grid, spline(grid)


def uniform_samples(traj: Trajectory, dt: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Uniformly spaced (times, states).

    Uses the exact grid landings when the run was sampled, otherwise resamples with
    step dt.
    """
    t, Y = traj.sampled()
    if t.size >= 2 and (dt is None or np.isclose(t[1] - t[0], dt)):
        return t, Y
    if dt is None:
        raise DomainError("trajectory has no sampling grid; pass dt")
    return resample(traj, dt)


def _functional(traj: Trajectory, name: str):
    system = system_from_trajectory(traj)
    if name not in traj.invariants:
        raise DomainError(f"unknown functional {name!r}; available: {sorted(traj.invariants)}")

    def value(y: np.ndarray) -> float:
        return float(system.invariants(y[None, :])[name][0])

    def rate(y: np.ndarray) -> float:
        # central difference along the flow; exact for quadratic functionals
        f = system.rhs(y)
        norm_f = float(np.linalg.norm(f))
        if norm_f == 0.0:
            return 0.0
        eps = max(float(np.linalg.norm(y)), 1.0) / norm_f
        return (value(y + eps * f) - value(y - eps * f)) / (2 * eps)

    return system, value, rate


def _refine(system, y: np.ndarray, f: np.ndarray, t0: float, dt: float, g: Callable[[np.ndarray], float]) -> Tuple[float, np.ndarray]:
    """Root of g along the step from (t0, y) of length dt; falls back to the right node."""

    def along(tau: float) -> float:
        return g(dp_step(system.rhs, y, f, tau)[0]) if tau > 0 else g(y)

    lo, hi = along(0.0), along(dt)
    if lo == 0.0:
        return t0, y
    if lo * hi > 0:
        return t0 + dt, dp_step(system.rhs, y, f, dt)[0]
    tau = brentq(along, 0.0, dt, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    return t0 + tau, dp_step(system.rhs, y, f, tau)[0] if tau > 0 else y


def locate_extrema(traj: Trajectory, name: str) -> List[Extremum]:
    """Interior local minima and maxima of a monitored functional, in time order."""
    system, value, rate = _functional(traj, name)
    rates = np.array([rate(y) for y in traj.states])
    out: List[Extremum] = []
    for i in range(len(traj) - 1):
        a, b = rates[i], rates[i + 1]
        if a > 0 >= b:
            kind = "max"
        elif a < 0 <= b:
            kind = "min"
        else:
            continue
        dt = traj.times[i + 1] - traj.times[i]
        t, y = _refine(system, traj.states[i], traj.derivatives[i], traj.times[i], dt, rate)
        out.append(Extremum(float(t), value(y), kind))
    return out


def first_passage(traj: Trajectory, name: str, level: float) -> Optional[float]:
    """First time the functional reaches level from below; None when it never does."""
    system, value, _ = _functional(traj, name)
    values = traj.invariants[name]
    if values[0] >= level:
        return 0.0
    above = np.nonzero(values >= level)[0]
    if above.size == 0:
        return None
    i = int(above[0]) - 1
    dt = traj.times[i + 1] - traj.times[i]
    t, _ = _refine(system, traj.states[i], traj.derivatives[i], traj.times[i], dt, lambda y: value(y) - level)
    return float(t)


def reversibility_error(traj: Trajectory, rtol: Optional[float] = None, atol: Optional[float] = None) -> float:
    """
    Max-norm distance to the initial state after integrating back to t = 0.

    For a homogeneous quadratic field f(-y) = f(y), so the backward flow from y(T) is
    minus the forward flow from -y(T).
    """
    system = system_from_trajectory(traj)
    back = integrate_system(system, -traj.states[-1], traj.t_end, rtol, atol)
    return float(np.max(np.abs(-back.states[-1] - traj.states[0])))
