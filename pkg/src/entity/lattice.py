"""Lattice entities: wavevectors, dispersion parameters, triads and primitive decompositions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple

from commons.errors import DomainError, UsageError

Signs = Tuple[int, int, int]


@dataclass(frozen=True, order=True)
class WaveVector:
    """Integer mode index (n1, n2, n3); n3 is the vertical wavenumber."""

    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        for name in ("n1", "n2", "n3"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise DomainError(f"WaveVector.{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))

    @classmethod
    def of(cls, values: Iterable[int]) -> "WaveVector":
        values = tuple(values)
        if len(values) != 3:
            raise DomainError(f"WaveVector needs 3 components, got {len(values)}")
        return cls(*values)

    @classmethod
    def parse(cls, text: str) -> "WaveVector":
        """Parse '1,2,-3'. Malformed text is a usage error."""
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError as e:
            raise UsageError(f"malformed wavevector {text!r}") from e
        if len(parts) != 3:
            raise UsageError(f"malformed wavevector {text!r}: expected 3 integers")
        return cls(*parts)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    def is_zero(self) -> bool:
        return self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def component(self, index: int) -> int:
        """1-based component access."""
        return self.as_tuple()[index - 1]

    def scaled(self, gamma: int) -> "WaveVector":
        return WaveVector(gamma * self.n1, gamma * self.n2, gamma * self.n3)

    def __add__(self, other: "WaveVector") -> "WaveVector":
        return WaveVector(self.n1 + other.n1, self.n2 + other.n2, self.n3 + other.n3)

    def __neg__(self) -> "WaveVector":
        return self.scaled(-1)

    def __str__(self) -> str:
        return f"({self.n1},{self.n2},{self.n3})"


@dataclass(frozen=True)
class LatticeParams:
    """Dispersion parameters (theta1, theta2, theta3), all strictly positive."""

    theta1: float
    theta2: float
    theta3: float

    def __post_init__(self):
        for name in ("theta1", "theta2", "theta3"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"LatticeParams.{name} must be positive, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def cylinder(cls, h: float) -> "LatticeParams":
        """Lattice model of a cylinder of aspect h: (1, 1, 1/h^2)."""
        if h <= 0:
            raise DomainError(f"cylinder aspect must be positive, got {h!r}")
        return cls(1.0, 1.0, 1.0 / (h * h))

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.theta1, self.theta2, self.theta3)

    def norm(self, v: WaveVector) -> float:
        return math.sqrt(self.theta1 * v.n1 ** 2 + self.theta2 * v.n2 ** 2 + self.theta3 * v.n3 ** 2)

    def to_dict(self) -> Dict[str, float]:
        return {"theta1": self.theta1, "theta2": self.theta2, "theta3": self.theta3}


@dataclass(frozen=True)
class Triad:
    """
    Resonant triple n = k + m.

    signs is the residual branch (s_n, s_k, s_m); lambdas are the signed curl
    eigenvalues (lambda_k, lambda_m, lambda_n) with lambda_v = s_v * |v|_theta, so
    that the residual reads n3/lambda_n + k3/lambda_k + m3/lambda_m.
    """

    k: WaveVector
    m: WaveVector
    n: WaveVector
    signs: Signs
    lambdas: Tuple[float, float, float]
    residual: float
    params: LatticeParams
    notes: Tuple[str, ...] = field(default=("non-degeneracy unverified",))

    def key(self) -> Tuple[int, ...]:
        return self.k.as_tuple() + self.m.as_tuple()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": list(self.k.as_tuple()),
            "m": list(self.m.as_tuple()),
            "n": list(self.n.as_tuple()),
            "signs": list(self.signs),
            "lambdas": list(self.lambdas),
            "residual": self.residual,
        }


@dataclass(frozen=True)
class PrimitivePair:
    """
    Primitive data of a degenerate triad:
    n = d * (a*kbar + b*mbar) = d * (a'*sigma_i(kbar) + b'*sigma_j(mbar)).

    d is the homothety factor removed from (kbar, mbar); it is 1 for primitive input.
    """

    kbar: WaveVector
    mbar: WaveVector
    n: WaveVector
    a: int
    b: int
    a_prime: int
    b_prime: int
    i: int
    j: int
    alpha: Fraction
    beta: Fraction
    d: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kbar": list(self.kbar.as_tuple()),
            "mbar": list(self.mbar.as_tuple()),
            "n": list(self.n.as_tuple()),
            "a": self.a,
            "b": self.b,
            "a_prime": self.a_prime,
            "b_prime": self.b_prime,
            "i": self.i,
            "j": self.j,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "d": self.d,
        }
