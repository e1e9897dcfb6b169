"""Integer-lattice resonance: dispersion ratios, triad search, the theta3 quartic and triad algebra."""

from app.lattice.resonance import (
    SIGN_BRANCHES,
    apply_symmetry,
    best_branch,
    canonical_pair,
    canonicalize,
    dispersion_ratio,
    make_triad,
    residual,
    search_triads,
)
from app.lattice.quartic import (
    beta_asymptotic,
    quartic_coefficients,
    resonance_curve,
    solve_theta3,
    solve_theta3_cylinder,
)
from app.lattice.algebra import (
    conjugate_triad,
    decompose_primitive,
    degeneracy_G,
    irreducibility_det,
    primitive_checks,
    synthesize_degenerate_pair,
    transfer_signs,
)

__all__ = [
    "SIGN_BRANCHES",
    "apply_symmetry",
    "best_branch",
    "canonical_pair",
    "canonicalize",
    "dispersion_ratio",
    "make_triad",
    "residual",
    "search_triads",
    "beta_asymptotic",
    "quartic_coefficients",
    "resonance_curve",
    "solve_theta3",
    "solve_theta3_cylinder",
    "conjugate_triad",
    "decompose_primitive",
    "degeneracy_G",
    "irreducibility_det",
    "primitive_checks",
    "synthesize_degenerate_pair",
    "transfer_signs",
]
