"""Energy, helicity, enstrophy, H^s norms, Manley-Rowe and coupled invariants."""

from app.invariants.report import (
    coupled_alphas,
    coupled_invariants,
    invariant_report,
    manley_rowe,
    manley_rowe_arrays,
    quadratic_invariants,
    vandermonde_forward,
    vandermonde_recover,
    xi_rate,
)

__all__ = [
    "coupled_alphas",
    "coupled_invariants",
    "invariant_report",
    "manley_rowe",
    "manley_rowe_arrays",
    "quadratic_invariants",
    "vandermonde_forward",
    "vandermonde_recover",
    "xi_rate",
]
