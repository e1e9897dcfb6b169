"""
Right-hand sides of the three resonant systems and their integrator adapters.

complex triad:  dU_n/dt = -i (l_k - l_m) C U_k U_m
                dU_k/dt =  i (l_m - l_n) C U_n conj(U_m)
                dU_m/dt =  i (l_n - l_k) C U_n conj(U_k)
real triad:     p' = -(mu - nu) q r,  q' = -(nu - lam) r p,  r' = -(lam - mu) p q
coupled:        two rigid bodies (k, m, n) and (mt, n, kt) sharing a_n
"""

from __future__ import annotations

import math
from typing import Any, Dict, Sequence, Tuple, Type

import numpy as np

from app.dynamics.base import ResonantSystem
from app.invariants.report import coupled_alphas, coupled_invariants, manley_rowe_arrays, quadratic_invariants
from commons.constants import Constants as Co
from commons.errors import DomainError
from entity.states import ComplexTriadState, CoupledState, RealTriadState


def rhs_complex(s: ComplexTriadState) -> Tuple[complex, complex, complex]:
    """(dU_k, dU_m, dU_n)."""
    return _complex_field(s.U, s.lambdas, s.C)


def _complex_field(U, lambdas: Sequence[float], C: float):
    uk, um, un = U
    lk, lm, ln = lambdas
    d_un = -1j * (lk - lm) * C * uk * um
    d_uk = 1j * (lm - ln) * C * un * um.conjugate()
    d_um = 1j * (ln - lk) * C * un * uk.conjugate()
    return (d_uk, d_um, d_un)


def rhs_real(s: RealTriadState) -> Tuple[float, float, float]:
    p, q, r = s.amplitudes
    return (-(s.mu - s.nu) * q * r, -(s.nu - s.lam) * r * p, -(s.lam - s.mu) * p * q)


def rhs_coupled(s: CoupledState) -> Tuple[float, float, float, float, float]:
    return tuple(float(x) for x in _coupled_field(np.array(s.a), s.lambdas, s.gamma, s.gamma_tilde))


def _coupled_field(a: np.ndarray, lambdas: Sequence[float], g: float, gt: float) -> np.ndarray:
    ak, am, an, amt, akt = a
    lk, lm, ln, lmt, lkt = lambdas
    return np.array([
        (lm - ln) * g * am * an,
        (ln - lk) * g * an * ak,
        (lk - lm) * g * ak * am + (lkt - lmt) * gt * akt * amt,
        (ln - lkt) * gt * an * akt,
        (lmt - ln) * gt * amt * an,
    ])


def _axis_saddle_distance(amplitudes: np.ndarray, lambdas: Sequence[float]) -> float:
    """Distance of |amplitudes| to (0, sqrt(E), 0) on the middle-eigenvalue axis."""
    mid = int(np.argsort(lambdas)[1])
    r = np.abs(amplitudes)
    radius = math.sqrt(float(r @ r))
    others = float(r @ r) - r[mid] ** 2
    return math.sqrt(max(others, 0.0) + (r[mid] - radius) ** 2)


class RealTriadSystem:
    system_id = Co.REAL
    labels = ("p", "q", "r")

    def __init__(self, lambdas: Sequence[float], s_list: Sequence[float] = (3.0,)):
        self.lam, self.mu, self.nu = (float(x) for x in lambdas)
        RealTriadState(0.0, 0.0, 0.0, self.lam, self.mu, self.nu)
        self.s_list = tuple(s_list)

    @classmethod
    def from_state(cls, state: RealTriadState, s_list: Sequence[float] = (3.0,)):
        return cls(state.lambdas, s_list), np.array(state.amplitudes, dtype=float)

    @classmethod
    def from_params(cls, params: Dict[str, Any], s_list: Sequence[float] = (3.0,)):
        return cls(params["lambdas"], s_list)

    @property
    def params(self) -> Dict[str, Any]:
        return {"lambdas": [self.lam, self.mu, self.nu]}

    def rhs(self, y: np.ndarray) -> np.ndarray:
        p, q, r = y
        return np.array([-(self.mu - self.nu) * q * r, -(self.nu - self.lam) * r * p, -(self.lam - self.mu) * p * q])

    def jacobian(self, y: np.ndarray) -> np.ndarray:
        p, q, r = y
        a, b, c = self.mu - self.nu, self.nu - self.lam, self.lam - self.mu
        return -np.array([[0.0, a * r, a * q], [b * r, 0.0, b * p], [c * q, c * p, 0.0]])

    def invariants(self, Y: np.ndarray) -> Dict[str, np.ndarray]:
        return quadratic_invariants(np.asarray(Y) ** 2, (self.lam, self.mu, self.nu), self.s_list)

    def saddle_distance(self, y: np.ndarray) -> float:
        return _axis_saddle_distance(y, (self.lam, self.mu, self.nu))

    def to_state(self, y: np.ndarray) -> RealTriadState:
        return RealTriadState(*y, self.lam, self.mu, self.nu)


class ComplexTriadSystem:
    """State vector (Re U_k, Im U_k, Re U_m, Im U_m, Re U_n, Im U_n)."""

    system_id = Co.COMPLEX
    labels = ("Re_Uk", "Im_Uk", "Re_Um", "Im_Um", "Re_Un", "Im_Un")

    def __init__(self, lambdas: Sequence[float], C: float = 1.0, s_list: Sequence[float] = (3.0,)):
        self.lambdas = tuple(float(x) for x in lambdas)
        self.C = float(C)
        ComplexTriadState((0, 0, 0), self.lambdas, self.C)
        self.s_list = tuple(s_list)

    @staticmethod
    def pack(U: Sequence[complex]) -> np.ndarray:
        return np.array([c for u in U for c in (u.real, u.imag)], dtype=float)

    @staticmethod
    def unpack(y: np.ndarray) -> np.ndarray:
        y = np.asarray(y)
        return y[..., 0::2] + 1j * y[..., 1::2]

    @classmethod
    def from_state(cls, state: ComplexTriadState, s_list: Sequence[float] = (3.0,)):
        return cls(state.lambdas, state.C, s_list), cls.pack(state.U)

    @classmethod
    def from_params(cls, params: Dict[str, Any], s_list: Sequence[float] = (3.0,)):
        return cls(params["lambdas"], params.get("C", 1.0), s_list)

    @property
    def params(self) -> Dict[str, Any]:
        return {"lambdas": list(self.lambdas), "C": self.C}

    def rhs(self, y: np.ndarray) -> np.ndarray:
        return self.pack(_complex_field(self.unpack(y), self.lambdas, self.C))

    def jacobian(self, y: np.ndarray) -> np.ndarray:
        """Real 6x6 Jacobian assembled from the complex derivatives in Re U and Im U."""
        uk, um, un = self.unpack(y)
        lk, lm, ln = self.lambdas
        a, b, c = 1j * (lm - ln) * self.C, 1j * (ln - lk) * self.C, -1j * (lk - lm) * self.C
        # rows (dU_k, dU_m, dU_n), columns (U_k, U_m, U_n)
        d_re = np.array([
            [0.0, a * un, a * um.conjugate()],
            [b * un, 0.0, b * uk.conjugate()],
            [c * um, c * uk, 0.0],
        ])
        d_im = np.array([
            [0.0, -1j * a * un, 1j * a * um.conjugate()],
            [-1j * b * un, 0.0, 1j * b * uk.conjugate()],
            [1j * c * um, 1j * c * uk, 0.0],
        ])
        J = np.empty((6, 6))
        J[0::2, 0::2], J[1::2, 0::2] = d_re.real, d_re.imag
        J[0::2, 1::2], J[1::2, 1::2] = d_im.real, d_im.imag
        return J

    def invariants(self, Y: np.ndarray) -> Dict[str, np.ndarray]:
        U = self.unpack(Y)
        out = quadratic_invariants(np.abs(U) ** 2, self.lambdas, self.s_list)
        mr = manley_rowe_arrays(U, self.lambdas)
        out.update({k: mr[k] for k in ("MR_phase", "MR_E1", "MR_E2")})
        return out

    def saddle_distance(self, y: np.ndarray) -> float:
        return _axis_saddle_distance(np.abs(self.unpack(y)), self.lambdas)

    def to_state(self, y: np.ndarray) -> ComplexTriadState:
        return ComplexTriadState(tuple(self.unpack(y)), self.lambdas, self.C)


class CoupledSystem:
    system_id = Co.COUPLED
    labels = ("a_k", "a_m", "a_n", "a_mt", "a_kt")

    def __init__(self, lambdas: Sequence[float], gamma: float = 1.0, gamma_tilde: float = 1.0, s_list: Sequence[float] = (3.0,)):
        self.lambdas = tuple(float(x) for x in lambdas)
        self.gamma = float(gamma)
        self.gamma_tilde = float(gamma_tilde)
        CoupledState((0.0,) * 5, self.lambdas, self.gamma, self.gamma_tilde)
        coupled_alphas(self.lambdas)
        self.s_list = tuple(s_list)

    @classmethod
    def from_state(cls, state: CoupledState, s_list: Sequence[float] = (3.0,)):
        return cls(state.lambdas, state.gamma, state.gamma_tilde, s_list), np.array(state.a, dtype=float)

    @classmethod
    def from_params(cls, params: Dict[str, Any], s_list: Sequence[float] = (3.0,)):
        return cls(params["lambdas"], params.get("gamma", 1.0), params.get("gamma_tilde", 1.0), s_list)

    @property
    def params(self) -> Dict[str, Any]:
        return {"lambdas": list(self.lambdas), "gamma": self.gamma, "gamma_tilde": self.gamma_tilde}

    def rhs(self, y: np.ndarray) -> np.ndarray:
        return _coupled_field(y, self.lambdas, self.gamma, self.gamma_tilde)

    def jacobian(self, y: np.ndarray) -> np.ndarray:
        ak, am, an, amt, akt = y
        lk, lm, ln, lmt, lkt = self.lambdas
        g, gt = self.gamma, self.gamma_tilde
        J = np.zeros((5, 5))
        J[0, 1], J[0, 2] = (lm - ln) * g * an, (lm - ln) * g * am
        J[1, 0], J[1, 2] = (ln - lk) * g * an, (ln - lk) * g * ak
        J[2, 0], J[2, 1] = (lk - lm) * g * am, (lk - lm) * g * ak
        J[2, 3], J[2, 4] = (lkt - lmt) * gt * akt, (lkt - lmt) * gt * amt
        J[3, 2], J[3, 4] = (ln - lkt) * gt * akt, (ln - lkt) * gt * an
        J[4, 2], J[4, 3] = (lmt - ln) * gt * amt, (lmt - ln) * gt * an
        return J

    def invariants(self, Y: np.ndarray) -> Dict[str, np.ndarray]:
        Y = np.asarray(Y)
        out = quadratic_invariants(Y ** 2, self.lambdas, self.s_list)
        out.update(coupled_invariants(Y, self.lambdas))
        return out

    def saddle_distance(self, y: np.ndarray) -> float:
        return math.sqrt(y[1] ** 2 + y[2] ** 2 + y[3] ** 2)

    def to_state(self, y: np.ndarray) -> CoupledState:
        return CoupledState(tuple(y), self.lambdas, self.gamma, self.gamma_tilde)


SYSTEM_REGISTRY: Dict[str, Type[ResonantSystem]] = {
    Co.REAL: RealTriadSystem,
    Co.COMPLEX: ComplexTriadSystem,
    Co.COUPLED: CoupledSystem,
}


def get_system(system_id: str) -> Type[ResonantSystem]:
    """Return the system class registered under system_id."""
    try:
        return SYSTEM_REGISTRY[system_id]
    except KeyError:
        raise DomainError(f"unknown system {system_id!r}; known: {sorted(SYSTEM_REGISTRY)}") from None


def register_system(system_id: str, system_cls: Type[ResonantSystem]) -> None:
    """Register a system class (e.g. a test field)."""
    SYSTEM_REGISTRY[system_id] = system_cls


def system_from_trajectory(traj) -> ResonantSystem:
    return get_system(traj.system_id).from_params(traj.params)
