"""
The enstrophy cubic of the real triad.

With r(0) = 0 the enstrophy oscillates between the two upper roots of
P(x) = (x - x_minus)(x - x_zero)(x - x_plus) and satisfies Xi'^2 = -4 K P(Xi), so the
time from a minimum to the next maximum is

    T = 1 / (2 sqrt(K)) * integral_{x_zero}^{x_plus} dx / sqrt(-P(x)).
"""

from __future__ import annotations

import math
from typing import Tuple

import numpy as np
from scipy.integrate import quad

from app.invariants.report import vandermonde_recover
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import DomainError
from entity.reports import CubicData


def _require_distinct(lam: float, mu: float, nu: float) -> None:
    if lam == mu or lam == nu or mu == nu:
        raise DomainError(f"lambda, mu, nu must be pairwise distinct, got {(lam, mu, nu)}")


def k_constant(lam: float, mu: float, nu: float) -> float:
    _require_distinct(lam, mu, nu)
    num = lam ** 2 * (mu - nu) + mu ** 2 * (nu - lam) + nu ** 2 * (lam - mu)
    return num / ((lam - mu) * (lam - nu) * (mu - nu))


def cubic_data(lam: float, mu: float, nu: float, p0: float, q0: float) -> CubicData:
    """Roots for the initial condition (p0, q0, 0)."""
    _require_distinct(lam, mu, nu)
    if mu == 0:
        raise DomainError("mu must be nonzero")
    p2, q2 = p0 ** 2, q0 ** 2
    x_minus = lam * nu * p2 + mu ** 2 * q2 + mu * (lam - nu) * p2
    x_zero = lam ** 2 * p2 + mu ** 2 * q2
    x_plus = lam ** 2 * p2 + ((nu + lam) / mu - nu * lam / mu ** 2) * mu ** 2 * q2
    return CubicData(x_minus, x_zero, x_plus, k_constant(lam, mu, nu), (lam, mu, nu))


def cubic_data_from_invariants(E: float, H: float, lam: float, mu: float, nu: float) -> CubicData:
    """Roots for arbitrary initial data with energy E and helicity H."""
    _require_distinct(lam, mu, nu)
    return CubicData(
        x_minus=(mu + nu) * H - mu * nu * E,
        x_zero=(lam + mu) * H - lam * mu * E,
        x_plus=(lam + nu) * H - lam * nu * E,
        K=k_constant(lam, mu, nu),
        lambdas=(lam, mu, nu),
    )


_ROOT_AXIS = {"x_minus": "lambda", "x_zero": "nu", "x_plus": "mu"}


def oscillation_cubic(c: CubicData) -> Tuple[CubicData, str]:
    """
    Relabel the roots in increasing order.

    The enstrophy always oscillates between the two upper roots. The lowest root is
    the value Xi would take where one mode vanishes, so that mode is the axis the orbit
    circulates: x_minus (p = 0) for lambda, x_zero (r = 0) for nu, x_plus (q = 0) for mu.
    """
    labelled = sorted(
        (("x_minus", c.x_minus), ("x_zero", c.x_zero), ("x_plus", c.x_plus)), key=lambda item: item[1]
    )
    low, mid, high = (value for _, value in labelled)
    return CubicData(low, mid, high, c.K, c.lambdas), _ROOT_AXIS[labelled[0][0]]


def _require_ordered(x_minus: float, x_zero: float, x_plus: float) -> None:
    if not x_minus < x_zero < x_plus:
        raise DomainError(f"roots must satisfy x_minus < x_zero < x_plus, got {(x_minus, x_zero, x_plus)}")


def period_integral(x_minus: float, x_zero: float, x_plus: float) -> float:
    """
    integral_{x_zero}^{x_plus} dx / sqrt(-P(x)).

    x = x_zero + (x_plus - x_zero) sin^2(phi) removes both endpoint singularities.
    """
    _require_ordered(x_minus, x_zero, x_plus)
    low, span = x_zero - x_minus, x_plus - x_zero
    rel_tol = float(section(config, Co.CLOSED_FORM).get("quad_rel_tol", 1e-10))

    def integrand(phi: float) -> float:
        return 2.0 / math.sqrt(low + span * math.sin(phi) ** 2)

    # the integrand peaks within sqrt(low / span) of phi = 0 when x_zero nears x_minus
    width = math.sqrt(low / span)
    points = [w for w in (width, 10 * width, 100 * width) if w < math.pi / 2] or None
    value, _ = quad(integrand, 0.0, math.pi / 2, epsabs=0.0, epsrel=rel_tol, limit=400, points=points)
    return value


def half_period(c: CubicData) -> float:
    if not c.K > 0:
        raise DomainError(f"K must be positive, got {c.K}")
    return period_integral(c.x_minus, c.x_zero, c.x_plus) / (2.0 * math.sqrt(c.K))


def period_asymptotic(x_minus: float, x_zero: float, x_plus: float) -> float:
    """Logarithmic approximation of period_integral as x_zero approaches x_minus."""
    _require_ordered(x_minus, x_zero, x_plus)
    m = (x_plus - x_zero) / (x_plus - x_minus)
    # 1 - sqrt(m) without cancellation
    gap = ((x_zero - x_minus) / (x_plus - x_minus)) / (1.0 + math.sqrt(m))
    if not gap > 0:
        raise DomainError("asymptotic period diverges: x_zero coincides with x_minus")
    value = math.log(1.0 / gap) / math.sqrt(x_plus - x_minus)
    if not np.isfinite(value):
        raise DomainError("asymptotic period diverges")
    return value


def h3_from_enstrophy(Xi: float, E: float, H: float, lam: float, mu: float, nu: float, s: float = 3.0) -> float:
    """W_s of the real triad from (E, H, Xi); affine in Xi for fixed E and H."""
    rec = vandermonde_recover(E, H, Xi, lam, mu, nu)
    return sum(abs(l) ** (2 * s) * a2 for l, a2 in zip((lam, mu, nu), rec.as_tuple()))
