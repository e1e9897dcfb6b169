"""
Reduced Hamiltonian of the coupled two-rigid-body system.

Eliminating a_k and a_kt through E1 and E3 leaves

    H = c1 Gt (l_n - l_kt) F(a_m; E1, 1 - alpha) + c2 G (l_n - l_k) F(a_mt; E3, alpha~)

with F(x; A, B) = integral_0^x du / sqrt(A - B u^2). H is conserved while the branch
(c1, c2) = (sign a_k, -sign a_kt) is fixed and jumps where a_k or a_kt change sign.
"""

from __future__ import annotations

import math
from typing import List, Sequence, Tuple

import numpy as np

from app.invariants.report import coupled_alphas, coupled_invariants
from commons.constants import Constants as Co
from commons.errors import DomainError, PreconditionError
from entity.reports import HamiltonianSegment
from entity.trajectory import Trajectory


def antiderivative(x: float, A: float, B: float) -> float:
    """
    F(x) = integral du / sqrt(A - B u^2), odd in x.

    B > 0: arcsine. B < 0, A > 0: inverse hyperbolic sine. B < 0, A < 0: inverse
    hyperbolic cosine (|x| above the branch point). A = 0, B < 0: logarithm. B = 0: linear.
    """
    if not A - B * x * x > 0:
        raise DomainError(f"A - B x^2 must be positive (A={A}, B={B}, x={x})")
    if B > 0:
        arg = x * math.sqrt(B) / math.sqrt(A)
        return math.asin(max(-1.0, min(1.0, arg))) / math.sqrt(B)
    if B == 0:
        return x / math.sqrt(A)
    b = math.sqrt(-B)
    if A > 0:
        return math.asinh(x * b / math.sqrt(A)) / b
    if A == 0:
        return math.copysign(math.log(abs(x)), x) / b
    return math.copysign(math.acosh(abs(x) * b / math.sqrt(-A)), x) / b


def reduced_hamiltonian(
    a_m: float,
    a_mt: float,
    E1: float,
    E3: float,
    alpha: float,
    alphaTilde: float,
    Gamma: float,
    GammaTilde: float,
    lambdas: Sequence[float],
    branch: Tuple[int, int],
) -> float:
    lk, lm, ln, lmt, lkt = lambdas
    c1, c2 = branch
    first = GammaTilde * (ln - lkt) * antiderivative(a_m, E1, 1.0 - alpha)
    second = Gamma * (ln - lk) * antiderivative(a_mt, E3, alphaTilde)
    return c1 * first + c2 * second


def _sign(x: float) -> int:
    return 1 if x > 0 else -1 if x < 0 else 0


def _crossing(t0: float, t1: float, v0: float, v1: float) -> float:
    return t0 + (t1 - t0) * v0 / (v0 - v1)


def hamiltonian_segments(traj: Trajectory, near_branch: float = 1e-12) -> List[HamiltonianSegment]:
    """
    Split a coupled trajectory at sign changes of a_k, a_n and a_kt and evaluate the
    reduced Hamiltonian at every accepted step of each segment.

    E1 and E3 are taken per sample. Samples with a_k^2 or a_kt^2 below
    near_branch * E sit on a square-root branch point and are skipped. Segment ends are
    the linearly interpolated zero crossings.
    """
    if traj.system_id != Co.COUPLED:
        raise PreconditionError(f"reduced Hamiltonian needs a coupled trajectory, got {traj.system_id!r}")
    lambdas = tuple(float(x) for x in traj.params["lambdas"])
    gamma = float(traj.params.get("gamma", 1.0))
    gamma_t = float(traj.params.get("gamma_tilde", 1.0))
    alpha, alpha_t = coupled_alphas(lambdas)

    Y, t = traj.states, traj.times
    inv = coupled_invariants(Y, lambdas)
    energy = np.sum(Y ** 2, axis=1)
    watched = np.column_stack([traj.column(name) for name in ("a_k", "a_n", "a_kt")])

    # boundaries: index i means a sign change between samples i and i + 1
    cuts: List[Tuple[int, float]] = []
    for i in range(len(t) - 1):
        changed = [j for j in range(3) if watched[i, j] * watched[i + 1, j] < 0]
        if changed:
            j = changed[0]
            cuts.append((i, _crossing(t[i], t[i + 1], watched[i, j], watched[i + 1, j])))

    bounds = [(-1, float(t[0]))] + cuts + [(len(t) - 1, float(t[-1]))]
    segments: List[HamiltonianSegment] = []
    for (i0, t_start), (i1, t_end) in zip(bounds[:-1], bounds[1:]):
        idx = range(i0 + 1, i1 + 1)
        values = []
        branch = None
        for i in idx:
            ak, am, _, amt, akt = Y[i]
            if ak ** 2 <= near_branch * energy[i] or akt ** 2 <= near_branch * energy[i]:
                continue
            b = (_sign(ak), -_sign(akt))
            branch = branch or b
            values.append(
                reduced_hamiltonian(am, amt, inv["E1"][i], inv["E3"][i], alpha, alpha_t, gamma, gamma_t, lambdas, b)
            )
        if not values:
            continue
        values = np.array(values)
        segments.append(
            HamiltonianSegment(
                t_start=t_start,
                t_end=t_end,
                samples=int(values.size),
                branch=branch,
                value=float(values[0]),
                max_drift=float(np.abs(values - values[0]).max()),
            )
        )
    return segments
