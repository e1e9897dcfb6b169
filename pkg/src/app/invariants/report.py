"""Conserved and monitored functionals of the three resonant systems."""

from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from commons.errors import DomainError
from entity.reports import InvariantReport, ManleyRowe, VandermondeRecovery
from entity.states import ComplexTriadState, CoupledState, RealTriadState


def quadratic_invariants(amp2: np.ndarray, lambdas: Sequence[float], s_list: Iterable[float] = ()) -> Dict[str, np.ndarray]:
    """
    Energy, helicity, enstrophy and H^s norms from squared amplitudes.

    amp2 has the modes on its last axis. W_s uses |lambda|^(2s), so the sign of lambda
    only enters H.
    """
    amp2 = np.asarray(amp2, dtype=float)
    lam = np.asarray(lambdas, dtype=float)
    out = {
        "E": amp2.sum(axis=-1),
        "H": (lam * amp2).sum(axis=-1),
        "Xi": (lam ** 2 * amp2).sum(axis=-1),
    }
    for s in s_list:
        if s < 1:
            raise DomainError(f"H^s norms need s >= 1, got {s}")
        out[f"W_{s:g}"] = (np.abs(lam) ** (2 * s) * amp2).sum(axis=-1)
    return out


def coupled_alphas(lambdas: Sequence[float]) -> Tuple[float, float]:
    """alpha = (l_m - l_k)/(l_n - l_k), alpha_tilde = (l_mt - l_n)/(l_kt - l_n)."""
    lk, lm, ln, lmt, lkt = lambdas
    if ln == lk:
        raise DomainError("alpha undefined: lambda_n == lambda_k")
    if lkt == ln:
        raise DomainError("alpha_tilde undefined: lambda_kt == lambda_n")
    return (lm - lk) / (ln - lk), (lmt - ln) / (lkt - ln)


def coupled_invariants(a: np.ndarray, lambdas: Sequence[float]) -> Dict[str, np.ndarray]:
    """E1 = a_k^2 + (1-alpha) a_m^2, E2 = a_n^2 + alpha a_m^2 + (1-alpha~) a_mt^2, E3 = a_kt^2 + alpha~ a_mt^2."""
    alpha, alpha_t = coupled_alphas(lambdas)
    a = np.asarray(a, dtype=float)
    ak, am, an, amt, akt = (a[..., i] for i in range(5))
    return {
        "E1": ak ** 2 + (1 - alpha) * am ** 2,
        "E2": an ** 2 + alpha * am ** 2 + (1 - alpha_t) * amt ** 2,
        "E3": akt ** 2 + alpha_t * amt ** 2,
    }


def manley_rowe_arrays(U: np.ndarray, lambdas: Sequence[float]) -> Dict[str, np.ndarray]:
    """Vectorized Manley-Rowe quantities; U has (U_k, U_m, U_n) on its last axis."""
    U = np.asarray(U, dtype=complex)
    lk, lm, ln = lambdas
    uk, um, un = U[..., 0], U[..., 1], U[..., 2]
    z = un * np.conj(uk) * np.conj(um)
    rk2, rm2, rn2 = np.abs(uk) ** 2, np.abs(um) ** 2, np.abs(un) ** 2
    return {
        "MR_phase": z.real,
        "MR_sine": z.imag,
        "MR_E1": (lm - ln) * rn2 - (lk - lm) * rk2,
        "MR_E2": (ln - lk) * rk2 - (lm - ln) * rm2,
        "MR_printed_E1": (lk - lm) * rn2 - (lm - ln) * rk2,
        "MR_printed_E2": (lm - ln) * rk2 - (ln - lk) * rm2,
    }


def manley_rowe(s: ComplexTriadState) -> ManleyRowe:
    q = manley_rowe_arrays(np.array(s.U), s.lambdas)
    return ManleyRowe(
        phase_invariant=float(q["MR_phase"]),
        phase_sine=float(q["MR_sine"]),
        E1=float(q["MR_E1"]),
        E2=float(q["MR_E2"]),
        printed_E1=float(q["MR_printed_E1"]),
        printed_E2=float(q["MR_printed_E2"]),
        zero_modulus=any(u == 0 for u in s.U),
    )


def invariant_report(state, s_list: Iterable[float] = (1.0, 2.0, 3.0)) -> InvariantReport:
    """E, H, Xi and W_s for any system state, plus Manley-Rowe or E1..E3 where they apply."""
    s_list = [float(s) for s in s_list]
    if isinstance(state, RealTriadState):
        amp2 = np.array(state.amplitudes) ** 2
        lambdas = state.lambdas
    elif isinstance(state, ComplexTriadState):
        amp2 = np.abs(np.array(state.U)) ** 2
        lambdas = state.lambdas
    elif isinstance(state, CoupledState):
        amp2 = np.array(state.a) ** 2
        lambdas = state.lambdas
    else:
        raise DomainError(f"unsupported state type {type(state).__name__}")
    q = quadratic_invariants(amp2, lambdas, s_list)
    report = dict(
        E=float(q["E"]),
        H=float(q["H"]),
        Xi=float(q["Xi"]),
        W_s={s: float(q[f"W_{s:g}"]) for s in s_list},
    )
    if isinstance(state, ComplexTriadState):
        report["manley_rowe"] = manley_rowe(state)
    if isinstance(state, CoupledState):
        alpha, alpha_t = coupled_alphas(state.lambdas)
        c = coupled_invariants(np.array(state.a), state.lambdas)
        report.update(E1=float(c["E1"]), E2=float(c["E2"]), E3=float(c["E3"]), alpha=alpha, alphaTilde=alpha_t)
    return InvariantReport(**report)


# =============================================================================
# Vandermonde inversion for the real triad
# =============================================================================

def _require_distinct(lam: float, mu: float, nu: float) -> None:
    if lam == mu or lam == nu or mu == nu:
        raise DomainError(f"eigenvalues must be pairwise distinct, got {(lam, mu, nu)}")


def vandermonde_forward(p2: float, q2: float, r2: float, lam: float, mu: float, nu: float) -> Tuple[float, float, float]:
    """(E, H, Xi) of squared amplitudes."""
    return (
        p2 + q2 + r2,
        lam * p2 + mu * q2 + nu * r2,
        lam ** 2 * p2 + mu ** 2 * q2 + nu ** 2 * r2,
    )


def vandermonde_recover(E: float, H: float, Xi: float, lam: float, mu: float, nu: float) -> VandermondeRecovery:
    """Squared amplitudes from (E, H, Xi); negative squares are returned with feasible=False."""
    _require_distinct(lam, mu, nu)
    p2 = (Xi - (mu + nu) * H + mu * nu * E) / ((lam - mu) * (lam - nu))
    q2 = (Xi - (nu + lam) * H + nu * lam * E) / ((mu - nu) * (mu - lam))
    r2 = (Xi - (lam + mu) * H + lam * mu * E) / ((nu - lam) * (nu - mu))
    return VandermondeRecovery(p2=p2, q2=q2, r2=r2, feasible=min(p2, q2, r2) >= 0)


def xi_rate(p: float, q: float, r: float, lam: float, mu: float, nu: float) -> float:
    """Closed-form dXi/dt = -2 (lam^2 (mu - nu) + mu^2 (nu - lam) + nu^2 (lam - mu)) p q r."""
    return -2.0 * (lam ** 2 * (mu - nu) + mu ** 2 * (nu - lam) + nu ** 2 * (lam - mu)) * p * q * r
