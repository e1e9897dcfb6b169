"""Dynamical states of the three resonant systems."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from commons.errors import DomainError


def _require_distinct(values, label: str) -> None:
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] == values[j]:
                raise DomainError(f"{label} must be pairwise distinct, got {tuple(values)}")


def _require_finite(values, label: str) -> None:
    if not all(math.isfinite(v) for v in values):
        raise DomainError(f"{label} must be finite, got {tuple(values)}")


@dataclass(frozen=True)
class ComplexTriadState:
    """Amplitudes (U_k, U_m, U_n) with eigenvalues (lambda_k, lambda_m, lambda_n) and coupling C."""

    U: Tuple[complex, complex, complex]
    lambdas: Tuple[float, float, float]
    C: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "U", tuple(complex(u) for u in self.U))
        object.__setattr__(self, "lambdas", tuple(float(x) for x in self.lambdas))
        if len(self.U) != 3 or len(self.lambdas) != 3:
            raise DomainError("complex triad needs 3 amplitudes and 3 eigenvalues")
        _require_distinct(self.lambdas, "lambdas")
        _require_finite([self.C, *self.lambdas], "lambdas and C")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "U": [[u.real, u.imag] for u in self.U],
            "lambdas": list(self.lambdas),
            "C": self.C,
        }


@dataclass(frozen=True)
class RealTriadState:
    """Rigid-body variables (p, q, r) with eigenvalues (lambda, mu, nu), time rescaled by C."""

    p: float
    q: float
    r: float
    lam: float
    mu: float
    nu: float

    def __post_init__(self):
        for name in ("p", "q", "r", "lam", "mu", "nu"):
            object.__setattr__(self, name, float(getattr(self, name)))
        _require_finite([self.p, self.q, self.r], "(p, q, r)")
        _require_distinct([self.lam, self.mu, self.nu], "(lambda, mu, nu)")

    @property
    def amplitudes(self) -> Tuple[float, float, float]:
        return (self.p, self.q, self.r)

    @property
    def lambdas(self) -> Tuple[float, float, float]:
        return (self.lam, self.mu, self.nu)

    def is_ordered(self) -> bool:
        return self.lam > self.mu > self.nu

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "q": self.q, "r": self.r, "lambdas": list(self.lambdas)}


@dataclass(frozen=True)
class CoupledState:
    """Five-mode state (a_k, a_m, a_n, a_mt, a_kt); lambdas in the same order."""

    a: Tuple[float, float, float, float, float]
    lambdas: Tuple[float, float, float, float, float]
    gamma: float = 1.0
    gamma_tilde: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(x) for x in self.a))
        object.__setattr__(self, "lambdas", tuple(float(x) for x in self.lambdas))
        if len(self.a) != 5 or len(self.lambdas) != 5:
            raise DomainError("coupled state needs 5 amplitudes and 5 eigenvalues")
        lk, lm, ln, lmt, lkt = self.lambdas
        _require_distinct([lk, lm, ln], "(lambda_k, lambda_m, lambda_n)")
        _require_distinct([lmt, ln, lkt], "(lambda_mt, lambda_n, lambda_kt)")
        _require_finite([*self.a, self.gamma, self.gamma_tilde], "coupled state")

    @property
    def a_k(self) -> float:
        return self.a[0]

    @property
    def a_m(self) -> float:
        return self.a[1]

    @property
    def a_n(self) -> float:
        return self.a[2]

    @property
    def a_mt(self) -> float:
        return self.a[3]

    @property
    def a_kt(self) -> float:
        return self.a[4]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": list(self.a),
            "lambdas": list(self.lambdas),
            "gamma": self.gamma,
            "gamma_tilde": self.gamma_tilde,
        }
