"""
Initial-condition recipes for run configs.

explicit         values as given (complex: Re/Im pairs of U_k, U_m, U_n)
h3-split         lambda^6 p0^2 = mu^6 q0^2 = W0 / 2, r0 = 0
enstrophy-split  lambda^2 p0^2 = mu^2 q0^2 = Xi0 / 2, r0 = 0
near-saddle      (0, sqrt(E0) (1 - eps), eps sqrt(E0)) next to the saddle on the q axis
"""

import math
from typing import Union

from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import ConfigError, DomainError
from entity.run_config import RunConfig
from entity.states import ComplexTriadState, CoupledState, RealTriadState

State = Union[RealTriadState, ComplexTriadState, CoupledState]


def _split(total: float, lam: float, mu: float, power: int):
    if lam == 0 or mu == 0:
        raise DomainError("split recipes need nonzero lambda and mu")
    half = math.sqrt(total / 2.0)
    return half / abs(lam) ** power, half / abs(mu) ** power


def build_initial_state(cfg: RunConfig) -> State:
    ic = cfg.initial_condition
    couplings = cfg.couplings
    if cfg.system == Co.COMPLEX:
        v = ic.values
        U = (complex(v[0], v[1]), complex(v[2], v[3]), complex(v[4], v[5]))
        return ComplexTriadState(U, tuple(cfg.lambdas), couplings.C)
    if cfg.system == Co.COUPLED:
        return CoupledState(tuple(ic.values), tuple(cfg.lambdas), couplings.gamma, couplings.gamma_tilde)

    lam, mu, nu = cfg.lambdas
    if ic.recipe == Co.EXPLICIT:
        p, q, r = ic.values
    elif ic.recipe == Co.H3_SPLIT:
        (p, q), r = _split(ic.W0, lam, mu, 3), 0.0
    elif ic.recipe == Co.ENSTROPHY_SPLIT:
        (p, q), r = _split(ic.Xi0, lam, mu, 1), 0.0
    elif ic.recipe == Co.NEAR_SADDLE:
        eps = ic.epsilon
        if eps is None:
            eps = float(section(config, Co.INITIAL_CONDITIONS).get("near_saddle_epsilon", 1e-4))
        radius = math.sqrt(ic.E0)
        p, q, r = 0.0, radius * (1.0 - eps), eps * radius
    else:
        raise ConfigError(f"unknown initial-condition recipe {ic.recipe!r}")
    return RealTriadState(p, q, r, lam, mu, nu)
