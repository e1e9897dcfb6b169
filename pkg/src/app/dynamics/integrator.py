"""
Adaptive Dormand-Prince 5(4) integration of a registered resonant system.

Every accepted step is kept. With sample_dt set, steps are clipped so that the
integrator lands exactly on t = i * sample_dt and those steps are flagged in
Trajectory.sample_mask. Step control is the PI controller of Hairer & Wanner
(alpha = 0.7/5, beta = 0.4/5). No projection unless renormalize=True.
"""

from __future__ import annotations

import math
import warnings
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from app.dynamics.base import ResonantSystem
from app.dynamics.systems import get_system
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import DomainError, IntegrationFailure, SlowPassageWarning, TEndCappedWarning
from entity.trajectory import Trajectory

# stage nodes
_C = [0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0]

# butcher table, row i holds the coefficients of stage i + 1; row 5 is the 5th order solution
_BT = {
    0: [1 / 5],
    1: [3 / 40, 9 / 40],
    2: [44 / 45, -56 / 15, 32 / 9],
    3: [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    4: [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    5: [35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
}

# 5th minus embedded 4th order weights (FSAL stage last)
_TR = [71 / 57600, 0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40]

_ORDER = 5
_EPS = np.finfo(float).eps


def dp_step(rhs: Callable[[np.ndarray], np.ndarray], y: np.ndarray, f0: np.ndarray, h: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One Dormand-Prince step from (y, f0 = rhs(y)); returns (y_new, rhs(y_new), error estimate)."""
    ks = [f0]
    for i in range(5):
        yi = y + h * sum(a * k for a, k in zip(_BT[i], ks) if a != 0)
        ks.append(rhs(yi))
    y_new = y + h * sum(b * k for b, k in zip(_BT[5], ks) if b != 0)
    f_new = rhs(y_new)
    ks.append(f_new)
    err = h * sum(e * k for e, k in zip(_TR, ks) if e != 0)
    return y_new, f_new, err


def _error_norm(err: np.ndarray, y: np.ndarray, y_new: np.ndarray, rtol: float, atol: float) -> float:
    if not (np.all(np.isfinite(err)) and np.all(np.isfinite(y_new))):
        return math.inf
    sc = atol + rtol * np.maximum(np.abs(y), np.abs(y_new))
    return float(np.sqrt(np.mean((err / sc) ** 2)))


def _initial_step(y0: np.ndarray, f0: np.ndarray, rtol: float, atol: float) -> float:
    sc = atol + rtol * np.abs(y0)
    d0 = float(np.sqrt(np.mean((y0 / sc) ** 2)))
    d1 = float(np.sqrt(np.mean((f0 / sc) ** 2)))
    if d0 < 1e-5 or d1 < 1e-5:
        return 1e-6
    return 0.01 * d0 / d1


def _check_tolerances(t_end: float, rtol: float, atol: float) -> None:
    if not (math.isfinite(t_end) and t_end > 0):
        raise DomainError(f"t_end must be positive and finite, got {t_end}")
    for name, tol in (("rtol", rtol), ("atol", atol)):
        if not (0 < tol <= 1e-3):
            raise DomainError(f"{name} must lie in (0, 1e-3], got {tol}")


def integrate(
    system_id: str,
    initial_state: Any,
    t_end: float,
    rtol: Optional[float] = None,
    atol: Optional[float] = None,
    *,
    sample_dt: Optional[float] = None,
    renormalize: bool = False,
    max_steps: Optional[int] = None,
    s_list: Sequence[float] = (3.0,),
) -> Trajectory:
    """
    Integrate the system registered under system_id from initial_state to t_end.

    Raises IntegrationFailure (with the partial trajectory attached) on step-size
    underflow or when max_steps accepted plus rejected steps are exhausted.
    """
    system, y0 = get_system(system_id).from_state(initial_state, s_list)
    return integrate_system(
        system, y0, t_end, rtol, atol, sample_dt=sample_dt, renormalize=renormalize, max_steps=max_steps
    )


def integrate_system(
    system: ResonantSystem,
    y0: np.ndarray,
    t_end: float,
    rtol: Optional[float] = None,
    atol: Optional[float] = None,
    *,
    sample_dt: Optional[float] = None,
    renormalize: bool = False,
    max_steps: Optional[int] = None,
) -> Trajectory:
    """Same as integrate, for an already bound system and a raw state vector."""
    settings = section(config, Co.INTEGRATOR)
    rtol = float(settings.get("rtol", 1e-10) if rtol is None else rtol)
    atol = float(settings.get("atol", 1e-12) if atol is None else atol)
    t_end = float(t_end)
    _check_tolerances(t_end, rtol, atol)
    if sample_dt is not None and not sample_dt > 0:
        raise DomainError(f"sample_dt must be positive, got {sample_dt}")

    t_cap = float(settings.get("max_t_end", 1e4))
    requested = t_end
    if t_end > t_cap:
        warnings.warn(f"t_end {t_end:g} capped at {t_cap:g}", TEndCappedWarning, stacklevel=2)
        t_end = t_cap

    safety = float(settings.get("safety", 0.9))
    fac_min = float(settings.get("fac_min", 0.2))
    fac_max = float(settings.get("fac_max", 5.0))
    alpha = float(settings.get("pi_alpha", 0.7 / _ORDER))
    beta = float(settings.get("pi_beta", 0.4 / _ORDER))
    max_steps = int(settings.get("max_steps", 2_000_000) if max_steps is None else max_steps)
    near_tol = float(settings.get("slow_passage_distance", 1e-8))
    near_frac = float(settings.get("slow_passage_fraction", 0.1))

    y = np.array(y0, dtype=float)
    if not np.all(np.isfinite(y)):
        raise DomainError("initial state must be finite")
    f = system.rhs(y)
    energy0 = float(y @ y)

    times, states, derivs, mask = [0.0], [y], [f], [sample_dt is not None]
    t = 0.0
    h = min(_initial_step(y, f, rtol, atol), t_end)
    err_prev = 1e-4
    accepted = rejected = near_saddle = 0
    next_sample = 1

    def build(partial: bool) -> Trajectory:
        Y = np.array(states)
        stats: Dict[str, Any] = {
            "accepted": accepted,
            "rejected": rejected,
            "rhs_evals": 1 + 6 * (accepted + rejected) + (accepted if renormalize else 0),
            "near_saddle_steps": near_saddle,
            "rtol": rtol,
            "atol": atol,
            "t_end_requested": requested,
            "t_end": t_end,
            "sample_dt": sample_dt,
            "renormalize": renormalize,
        }
        return Trajectory(
            system_id=system.system_id,
            labels=system.labels,
            params=system.params,
            times=np.array(times),
            states=Y,
            derivatives=np.array(derivs),
            sample_mask=np.array(mask),
            invariants=system.invariants(Y),
            stats=stats,
            partial=partial,
        )

    while t < t_end:
        if accepted + rejected >= max_steps:
            raise IntegrationFailure(
                f"max_steps={max_steps} exhausted at t={t:.6g}", trajectory=build(True), t=t, steps=accepted + rejected
            )
        target = t_end
        if sample_dt is not None:
            target = min(next_sample * sample_dt, t_end)
        landing = h >= target - t
        step = target - t if landing else h
        if step < 16 * _EPS * max(abs(t), 1.0):
            raise IntegrationFailure(
                f"step-size underflow at t={t:.17g} (h={step:.3g})", trajectory=build(True), t=t, h=step
            )

        with np.errstate(over="ignore", invalid="ignore"):
            y_new, f_new, err = dp_step(system.rhs, y, f, step)
            errn = _error_norm(err, y, y_new, rtol, atol)

        if errn > 1.0:
            rejected += 1
            shrink = 0.0 if math.isinf(errn) else safety * errn ** (-1.0 / _ORDER)
            h = step * max(fac_min, shrink)
            continue

        accepted += 1
        t = target if landing else t + step
        if renormalize and energy0 > 0:
            y_new = y_new * math.sqrt(energy0 / float(y_new @ y_new))
            f_new = system.rhs(y_new)
        y, f = y_new, f_new
        on_grid = sample_dt is not None and landing and target == next_sample * sample_dt
        if on_grid:
            next_sample += 1
        times.append(t)
        states.append(y)
        derivs.append(f)
        mask.append(on_grid)
        if system.saddle_distance(y) <= near_tol:
            near_saddle += 1

        if errn == 0.0:
            fac = fac_max
        else:
            fac = min(fac_max, max(fac_min, safety * errn ** (-alpha) * err_prev ** beta))
        err_prev = max(errn, 1e-4)
        proposal = step * fac
        h = min(h, proposal) if landing and step < h else proposal

    if accepted and near_saddle > near_frac * accepted:
        warnings.warn(
            f"{near_saddle}/{accepted} steps within {near_tol:g} of a saddle; step control degrades near homoclinic passage",
            SlowPassageWarning,
            stacklevel=2,
        )
    return build(False)
