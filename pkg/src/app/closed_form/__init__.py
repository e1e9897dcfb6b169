"""Closed-form enstrophy periods, burst bounds and the coupled reduced Hamiltonian."""

from app.closed_form.cubic import (
    cubic_data,
    cubic_data_from_invariants,
    h3_from_enstrophy,
    half_period,
    k_constant,
    oscillation_cubic,
    period_asymptotic,
    period_integral,
)
from app.closed_form.bursts import (
    ENSTROPHY,
    H3,
    burst_bounds_enstrophy,
    burst_bounds_h3,
    measure_burst,
    measure_period,
)
from app.closed_form.xi_ode import xi_ode_residual
from app.closed_form.hamiltonian import antiderivative, hamiltonian_segments, reduced_hamiltonian

__all__ = [
    "cubic_data",
    "cubic_data_from_invariants",
    "h3_from_enstrophy",
    "half_period",
    "k_constant",
    "oscillation_cubic",
    "period_asymptotic",
    "period_integral",
    "H3",
    "ENSTROPHY",
    "burst_bounds_h3",
    "burst_bounds_enstrophy",
    "measure_burst",
    "measure_period",
    "xi_ode_residual",
    "antiderivative",
    "reduced_hamiltonian",
    "hamiltonian_segments",
]
