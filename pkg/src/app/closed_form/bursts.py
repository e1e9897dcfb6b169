"""
Burst bounds for the real triad in the regime |mu| << lambda ~ |nu|, lambda nu < 0,
and their measurement on integrated trajectories.

rho = lambda / |mu|. The H^3 norm W grows by at least rho^6 / 4 within
t* <= 6 mu^2 ln(rho) / (rho sqrt(W0)); the enstrophy reaches about rho^2 Xi0 within
t** <= ln(rho) / (sqrt(2) rho sqrt(Xi0)).
"""

from __future__ import annotations

import math
from typing import Dict, Optional

import numpy as np

from app.closed_form.cubic import cubic_data_from_invariants, half_period, oscillation_cubic, period_asymptotic
from app.dynamics.sampling import first_passage, locate_extrema
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import DomainError, PreconditionError
from entity.reports import BurstBounds, BurstReport, CubicData, PeriodReport
from entity.trajectory import Trajectory

H3 = "h3"
ENSTROPHY = "enstrophy"

_FUNCTIONAL = {H3: "W_3", ENSTROPHY: "Xi"}


def _regime(lam: float, mu: float, nu: float) -> Dict[str, bool]:
    return {
        "ordered": lam > mu > nu,
        "mu_small": lam > 0 and abs(mu) / lam <= 0.1,
        "lambda_nu_comparable": nu != 0 and 0.8 <= abs(lam / nu) <= 1.25,
        "opposite_signs": lam * nu < 0,
    }


def _rho(lam: float, mu: float) -> float:
    if mu == 0:
        raise DomainError("mu must be nonzero")
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    return lam / abs(mu)


def burst_bounds_h3(lam: float, mu: float, nu: float, W0: float) -> BurstBounds:
    rho = _rho(lam, mu)
    if not W0 > 0:
        raise DomainError(f"W0 must be positive, got {W0}")
    return BurstBounds(
        kind=H3,
        ratio_bound=0.25 * (lam / mu) ** 6,
        t_star_bound=6.0 * mu ** 2 * math.log(rho) / (rho * math.sqrt(W0)),
        regime_ok=_regime(lam, mu, nu),
    )


def burst_bounds_enstrophy(lam: float, mu: float, nu: float, Xi0: float) -> BurstBounds:
    rho = _rho(lam, mu)
    if not Xi0 > 0:
        raise DomainError(f"Xi0 must be positive, got {Xi0}")
    return BurstBounds(
        kind=ENSTROPHY,
        ratio_bound=rho ** 2,
        t_star_bound=math.log(rho) / (math.sqrt(2.0) * rho * math.sqrt(Xi0)),
        regime_ok=_regime(lam, mu, nu),
    )


def _lambdas(traj: Trajectory):
    if traj.system_id != Co.REAL:
        raise PreconditionError(f"burst and period analysis need a real-triad trajectory, got {traj.system_id!r}")
    lam, mu, nu = (float(x) for x in traj.params["lambdas"])
    return lam, mu, nu


def measure_burst(traj: Trajectory, bounds: BurstBounds, cubic: Optional[CubicData] = None) -> BurstReport:
    """
    Compare a trajectory against burst bounds.

    The burst time is the first passage to ratio_bound * initial value, or the time of
    the first maximum when that level is never reached. For the enstrophy the ratio
    only has to land within a window around rho^2; with cubic given the measured
    maximum is also compared with x_plus.
    """
    _lambdas(traj)
    settings = section(config, Co.CLOSED_FORM)
    name = _FUNCTIONAL[bounds.kind]
    if name not in traj.invariants:
        raise PreconditionError(f"trajectory does not monitor {name}")
    values = traj.invariants[name]
    initial = float(values[0])
    if not initial > 0:
        raise PreconditionError(f"{name}(0) must be positive")

    maxima = [e for e in locate_extrema(traj, name) if e.kind == "max"]
    measured_max = max([float(values.max())] + [e.value for e in maxima])
    ratio = measured_max / initial

    checks: Dict[str, object] = {}
    if bounds.kind == H3:
        slack = float(settings.get("h3_ratio_slack", 1.0))
        level = slack * bounds.ratio_bound * initial
        ratio_ok = ratio >= slack * bounds.ratio_bound
        checks["ratio_slack"] = slack
    else:
        window = float(settings.get("enstrophy_ratio_window", 2.0))
        level = bounds.ratio_bound * initial
        ratio_ok = bounds.ratio_bound / window <= ratio <= bounds.ratio_bound * window
        checks["ratio_window"] = window
    checks["ratio_ok"] = ratio_ok

    t_star = first_passage(traj, name, level)
    level_reached = t_star is not None
    if t_star is None:
        t_star = maxima[0].t if maxima else float(traj.times[int(np.argmax(values))])
    within = t_star <= bounds.t_star_bound

    passed = ratio_ok
    if bounds.kind == H3:
        passed = passed and level_reached and within
    if cubic is not None:
        rel = abs(measured_max - cubic.x_plus) / abs(cubic.x_plus)
        tol = float(settings.get("extremum_rel_tol", 1e-6))
        checks.update(x_plus=cubic.x_plus, x_plus_rel_err=rel, x_plus_ok=rel <= tol)
        if bounds.kind == ENSTROPHY:
            passed = passed and rel <= tol
    return BurstReport(
        bounds=bounds,
        initial_value=initial,
        measured_max=measured_max,
        measured_ratio=ratio,
        measured_t_star=float(t_star),
        level_reached=level_reached,
        t_star_within_bound=within,
        passed=bool(passed),
        checks=checks,
    )


def measure_period(traj: Trajectory) -> PeriodReport:
    """
    Time from an enstrophy minimum to the next maximum against the quadrature half period.

    Works on either side of the separatrix: the roots are relabelled in increasing
    order and the report names the axis the orbit circulates.
    """
    lam, mu, nu = _lambdas(traj)
    E0, H0 = float(traj.invariants["E"][0]), float(traj.invariants["H"][0])
    cubic, axis = oscillation_cubic(cubic_data_from_invariants(E0, H0, lam, mu, nu))
    if not cubic.x_minus < cubic.x_zero < cubic.x_plus:
        raise PreconditionError(
            "enstrophy does not oscillate: the orbit is an equilibrium or lies on a separatrix",
            roots=[cubic.x_minus, cubic.x_zero, cubic.x_plus],
        )
    quadrature = half_period(cubic)
    try:
        asymptotic = period_asymptotic(cubic.x_minus, cubic.x_zero, cubic.x_plus) / (2.0 * math.sqrt(cubic.K))
    except DomainError:
        asymptotic = None

    extrema = locate_extrema(traj, "Xi")
    xi0 = float(traj.invariants["Xi"][0])
    if math.isclose(xi0, cubic.x_zero, rel_tol=1e-12):
        t_min, xi_min = 0.0, xi0
    else:
        mins = [e for e in extrema if e.kind == "min"]
        if not mins:
            raise PreconditionError("no enstrophy minimum on the trajectory")
        t_min, xi_min = mins[0].t, mins[0].value
    later = [e for e in extrema if e.kind == "max" and e.t > t_min]
    if not later:
        raise PreconditionError("trajectory ends before the enstrophy maximum; increase t_end")
    return PeriodReport(
        cubic=cubic,
        measured_half_period=later[0].t - t_min,
        quadrature_half_period=quadrature,
        asymptotic_half_period=asymptotic,
        xi_min=xi_min,
        xi_max=later[0].value,
        axis=axis,
    )
