"""Report types for invariants, closed-form data and trajectory analyses."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class ManleyRowe:
    """
    Phase-amplitude quantities of a complex triad.

    phase_invariant = r_k r_m r_n cos(theta_n - theta_k - theta_m) and E1, E2 are the
    combinations conserved by the flow; phase_sine, printed_E1 and printed_E2 are the
    sine form and the swapped-coefficient forms, kept for comparison.
    """

    phase_invariant: float
    phase_sine: float
    E1: float
    E2: float
    printed_E1: float
    printed_E2: float
    zero_modulus: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class InvariantReport:
    E: float
    H: float
    Xi: float
    W_s: Dict[float, float]
    manley_rowe: Optional[ManleyRowe] = None
    E1: Optional[float] = None
    E2: Optional[float] = None
    E3: Optional[float] = None
    alpha: Optional[float] = None
    alphaTilde: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "E": self.E,
            "H": self.H,
            "Xi": self.Xi,
            "W_s": {f"{s:g}": v for s, v in self.W_s.items()},
        }
        if self.manley_rowe is not None:
            d["manley_rowe"] = self.manley_rowe.to_dict()
        for name in ("E1", "E2", "E3", "alpha", "alphaTilde"):
            value = getattr(self, name)
            if value is not None:
                d[name] = value
        return d


@dataclass(frozen=True)
class VandermondeRecovery:
    p2: float
    q2: float
    r2: float
    feasible: bool

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.p2, self.q2, self.r2)


@dataclass(frozen=True)
class CubicData:
    """Roots and constant of the enstrophy cubic P(x) = (x - x_minus)(x - x_zero)(x - x_plus)."""

    x_minus: float
    x_zero: float
    x_plus: float
    K: float
    lambdas: Tuple[float, float, float]

    def is_ordered(self) -> bool:
        return self.x_minus < self.x_zero < self.x_plus and self.K > 0

    def P(self, x):
        return (x - self.x_minus) * (x - self.x_zero) * (x - self.x_plus)

    def P_prime(self, x):
        a, b, c = self.x_minus, self.x_zero, self.x_plus
        return (x - a) * (x - b) + (x - b) * (x - c) + (x - c) * (x - a)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x_minus": self.x_minus,
            "x_zero": self.x_zero,
            "x_plus": self.x_plus,
            "K": self.K,
            "lambdas": list(self.lambdas),
        }


@dataclass(frozen=True)
class BurstBounds:
    kind: str
    ratio_bound: float
    t_star_bound: float
    regime_ok: Dict[str, bool]

    @property
    def regime_valid(self) -> bool:
        return all(self.regime_ok.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "ratio_bound": self.ratio_bound,
            "t_star_bound": self.t_star_bound,
            "regime_flags": dict(self.regime_ok),
        }


@dataclass(frozen=True)
class BurstReport:
    bounds: BurstBounds
    initial_value: float
    measured_max: float
    measured_ratio: float
    measured_t_star: float
    level_reached: bool
    t_star_within_bound: bool
    passed: bool
    checks: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": "v1",
            "kind": self.bounds.kind,
            "regime_flags": dict(self.bounds.regime_ok),
            "ratio_bound": self.bounds.ratio_bound,
            "t_star_bound": self.bounds.t_star_bound,
            "initial_value": self.initial_value,
            "measured_max": self.measured_max,
            "measured_ratio": self.measured_ratio,
            "measured_t_star": self.measured_t_star,
            "level_reached": self.level_reached,
            "t_star_within_bound": self.t_star_within_bound,
            "checks": dict(self.checks),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class PeriodReport:
    cubic: CubicData
    measured_half_period: float
    quadrature_half_period: float
    asymptotic_half_period: Optional[float]
    xi_min: float
    xi_max: float
    axis: str = "lambda"

    @property
    def ratio_measured(self) -> float:
        return self.measured_half_period / self.quadrature_half_period

    @property
    def ratio_asymptotic(self) -> Optional[float]:
        if self.asymptotic_half_period is None:
            return None
        return self.asymptotic_half_period / self.quadrature_half_period

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": "v1",
            "cubic": self.cubic.to_dict(),
            "measured_half_period": self.measured_half_period,
            "quadrature_half_period": self.quadrature_half_period,
            "asymptotic_half_period": self.asymptotic_half_period,
            "ratio_measured_quadrature": self.ratio_measured,
            "ratio_asymptotic_quadrature": self.ratio_asymptotic,
            "xi_min": self.xi_min,
            "xi_max": self.xi_max,
            "axis": self.axis,
        }


@dataclass(frozen=True)
class HamiltonianSegment:
    t_start: float
    t_end: float
    samples: int
    branch: Tuple[int, int]
    value: float
    max_drift: float

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        d["branch"] = list(self.branch)
        return d


@dataclass(frozen=True)
class XiOdeResidual:
    value: float
    points: int
    constant: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class Equilibrium:
    point: Tuple[float, ...]
    label: str
    eigenvalues: Tuple[complex, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": list(self.point),
            "label": self.label,
            "eigenvalues": [[float(np.real(e)), float(np.imag(e))] for e in self.eigenvalues],
        }


@dataclass(frozen=True)
class CurvePoint:
    ratio2: float
    ratio3: Optional[float]
    residual: Optional[float]
    branch_flag: str

    def as_row(self) -> List[Any]:
        return [self.ratio2, self.ratio3, self.residual, self.branch_flag]


@dataclass(frozen=True)
class Extremum:
    t: float
    value: float
    kind: str  # "min" | "max"
