"""
The dispersion quartic in theta3 and resonance-curve tracking.

With u_v = theta3 + h_v the radical relation +-u_n^-1/2 +- u_k^-1/2 +- u_m^-1/2 = 0
is equivalent (after squaring out every branch) to
P(theta3) = u_k^2 u_m^2 + u_m^2 u_n^2 + u_n^2 u_k^2 - 2 u_k u_m u_n (u_k + u_m + u_n) = 0.
On the lattice h_v = (theta1 v1^2 + theta2 v2^2) / v3^2.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from app.lattice.resonance import SIGN_BRANCHES, require_strict, residual
from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import BranchAmbiguityWarning, DomainError
from entity.lattice import LatticeParams, Signs, WaveVector
from entity.reports import CurvePoint

_ADMISSIBLE_PSI = (0.0, math.pi / 2, -math.pi / 2)


def quartic_coefficients(h_k: float, h_m: float, h_n: float) -> Tuple[float, float, float, float, float]:
    """(P4, P3, P2, P1, P0), highest power first."""
    s1 = h_k + h_m + h_n
    s2 = h_k * h_m + h_m * h_n + h_n * h_k
    s3 = h_k * h_m * h_n
    p0 = (h_k * h_m) ** 2 + (h_m * h_n) ** 2 + (h_n * h_k) ** 2 - 2.0 * s3 * s1
    return (-3.0, -4.0 * s1, -6.0 * s2, -12.0 * s3, p0)


def lattice_h(v: WaveVector, theta1: float, theta2: float) -> float:
    return (theta1 * v.n1 ** 2 + theta2 * v.n2 ** 2) / v.n3 ** 2


def _lattice_settings():
    s = section(config, Co.LATTICE)
    return s.get("root_tol", 1e-10), s.get("theta_max", 1e4), s.get("imag_tol", 1e-7)


def _candidate_roots(coeffs, theta_max: float, imag_tol: float) -> List[float]:
    out = []
    for z in np.roots(coeffs):
        x = float(z.real)
        if abs(z.imag) <= imag_tol * max(1.0, abs(x)) and 0.0 < x <= theta_max:
            out.append(x)
    return sorted(out)


def _polish(f: Callable[[float], float], x: float) -> float:
    """Bracket a sign change of f around x and refine with brentq; x unchanged if none found."""
    fx = f(x)
    if fx == 0.0:
        return x
    for delta in (1e-10, 1e-8, 1e-6, 1e-4, 1e-3):
        lo, hi = x * (1.0 - delta), x * (1.0 + delta)
        flo, fhi = f(lo), f(hi)
        if flo == 0.0:
            return lo
        if fhi == 0.0:
            return hi
        if flo * fhi < 0:
            return brentq(f, lo, hi, xtol=1e-15 * x, rtol=4 * np.finfo(float).eps, maxiter=200)
    return x


def _verified_roots(
    coeffs,
    branch_residual: Callable[[float, Signs], float],
) -> List[Tuple[float, Signs]]:
    root_tol, theta_max, imag_tol = _lattice_settings()
    found: List[Tuple[float, Signs]] = []
    for x in _candidate_roots(coeffs, theta_max, imag_tol):
        signs = min(SIGN_BRANCHES, key=lambda s: abs(branch_residual(x, s)))
        x = _polish(lambda t: branch_residual(t, signs), x)
        signs = min(SIGN_BRANCHES, key=lambda s: abs(branch_residual(x, s)))
        if abs(branch_residual(x, signs)) > root_tol or not 0.0 < x <= theta_max:
            continue
        if any(abs(x - y) <= 1e-9 * max(1.0, y) for y, _ in found):
            continue
        found.append((x, signs))
    return sorted(found)


def solve_theta3(k: WaveVector, m: WaveVector, theta1: float, theta2: float) -> List[Tuple[float, Signs]]:
    """Positive theta3 making (k, m, k + m) resonant, each with a verified sign branch."""
    n = require_strict(k, m)
    LatticeParams(theta1, theta2, 1.0)
    coeffs = quartic_coefficients(lattice_h(k, theta1, theta2), lattice_h(m, theta1, theta2), lattice_h(n, theta1, theta2))

    def branch_residual(x: float, signs: Signs) -> float:
        return residual(k, m, LatticeParams(theta1, theta2, x), signs)

    return _verified_roots(coeffs, branch_residual)


def beta_asymptotic(n1: int, n2: int, psi: float) -> float:
    """Large-argument curl eigenvalue on the cylinder: n1 pi + n2 pi/2 + pi/4 + psi."""
    if n1 < 1:
        raise DomainError(f"n1 must be >= 1, got {n1}")
    if not any(math.isclose(psi, a, rel_tol=0.0, abs_tol=1e-12) for a in _ADMISSIBLE_PSI):
        raise DomainError(f"psi must be one of 0, +pi/2, -pi/2, got {psi!r}")
    return n1 * math.pi + n2 * math.pi / 2 + math.pi / 4 + psi


def cylinder_h(v: WaveVector, psi: float = 0.0) -> float:
    return beta_asymptotic(abs(v.n1), v.n2, psi) ** 2 / v.n3 ** 2


def cylinder_residual(k: WaveVector, m: WaveVector, theta3: float, signs: Sequence[int], psi: float = 0.0) -> float:
    n = require_strict(k, m)
    s_n, s_k, s_m = signs

    def ratio(v: WaveVector) -> float:
        return math.copysign(1.0, v.n3) / math.sqrt(theta3 + cylinder_h(v, psi))

    return s_n * ratio(n) + s_k * ratio(k) + s_m * ratio(m)


def solve_theta3_cylinder(k: WaveVector, m: WaveVector, psi: float = 0.0) -> List[Tuple[float, Signs]]:
    """Cylinder variant: h_v from the asymptotic radial eigenvalue; theta3 = 1/h^2 for aspect h."""
    n = require_strict(k, m)
    for v in (k, m, n):
        if v.n1 == 0:
            raise DomainError(f"cylinder modes need |n1| >= 1, got {v}")
    coeffs = quartic_coefficients(cylinder_h(k, psi), cylinder_h(m, psi), cylinder_h(n, psi))
    return _verified_roots(coeffs, lambda x, s: cylinder_residual(k, m, x, s, psi))


# =============================================================================
# Resonance curves
# =============================================================================

def resonance_curve(k: WaveVector, m: WaveVector, ratio2_grid: Sequence[float]) -> List[CurvePoint]:
    """
    Track theta3/theta1 as a function of theta2/theta1 (theta1 = 1) by continuity.

    Each grid point takes the verified root nearest the last defined value; equidistant
    roots resolve to the smaller one with flag 'ambiguous'. Points without a root are 'gap'.
    """
    grid = [float(x) for x in ratio2_grid]
    if not grid:
        raise DomainError("resonance curve needs a non-empty grid")
    if any(x <= 0 for x in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("ratio2 grid must be positive and strictly increasing")
    tie_tol = section(config, Co.LATTICE).get("curve_tie_tol", 1e-12)

    points: List[CurvePoint] = []
    previous: Optional[float] = None
    for ratio2 in grid:
        roots = solve_theta3(k, m, 1.0, ratio2)
        if not roots:
            points.append(CurvePoint(ratio2, None, None, "gap"))
            continue
        flag = "ok"
        if previous is None:
            x, signs = roots[0]
        else:
            ranked = sorted(roots, key=lambda r: (abs(r[0] - previous), r[0]))
            x, signs = ranked[0]
            if len(ranked) > 1:
                d0, d1 = abs(ranked[0][0] - previous), abs(ranked[1][0] - previous)
                if abs(d1 - d0) <= tie_tol * max(1.0, previous):
                    flag = "ambiguous"
                    x, signs = min(ranked[0], ranked[1])
                    warnings.warn(
                        f"two roots equidistant from {previous:.6g} at ratio2={ratio2:.6g}; taking {x:.6g}",
                        BranchAmbiguityWarning,
                        stacklevel=2,
                    )
        value = residual(k, m, LatticeParams(1.0, ratio2, x), signs)
        points.append(CurvePoint(ratio2, x, value, flag))
        previous = x
    return points
