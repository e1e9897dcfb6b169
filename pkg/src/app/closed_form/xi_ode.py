"""Second-order check Xi'' = -2 K P'(Xi) on uniformly sampled real-triad runs."""

from __future__ import annotations

from typing import Optional

import numpy as np

from app.dynamics.sampling import uniform_samples
from app.dynamics.systems import system_from_trajectory
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import PreconditionError
from entity.reports import CubicData, XiOdeResidual
from entity.trajectory import Trajectory

_MIN_SAMPLES = 10


def xi_ode_residual(traj: Trajectory, c: CubicData, dt: Optional[float] = None) -> XiOdeResidual:
    """
    Max residual of the central-difference Xi'' against -2 K P'(Xi), relative to max |2 K P'|.

    Points where |Xi'| falls in the lowest percentile (near extrema) are excluded. Uses the
    integrator's sampling grid when present, otherwise a Hermite resampling with step dt.
    """
    if traj.system_id != Co.REAL:
        raise PreconditionError(f"Xi ODE check needs a real-triad trajectory, got {traj.system_id!r}")
    t, Y = uniform_samples(traj, dt)
    if t.size < _MIN_SAMPLES:
        raise PreconditionError(f"trajectory too short: {t.size} samples, need {_MIN_SAMPLES}")

    xi = system_from_trajectory(traj).invariants(Y)["Xi"]
    if np.ptp(xi) <= 1e-14 * max(float(np.abs(xi).max()), 1.0):
        return XiOdeResidual(value=0.0, points=0, constant=True)

    h = t[1] - t[0]
    xi_dd = (xi[2:] - 2.0 * xi[1:-1] + xi[:-2]) / h ** 2
    xi_d = np.abs(xi[2:] - xi[:-2]) / (2.0 * h)
    target = -2.0 * c.K * c.P_prime(xi[1:-1])

    pct = float(section(config, Co.CLOSED_FORM).get("xi_ode_percentile", 10))
    mask = xi_d > np.percentile(xi_d, pct)
    scale = float(np.abs(target).max())
    if not mask.any() or scale == 0.0:
        return XiOdeResidual(value=0.0, points=0, constant=True)
    value = float(np.abs(xi_dd - target)[mask].max() / scale)
    return XiOdeResidual(value=value, points=int(mask.sum()))
