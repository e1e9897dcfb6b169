"""
Exact integer algebra of resonant triads: irreducibility determinant, the degeneracy
condition G and the primitive decomposition of degenerate triads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from app.lattice.resonance import apply_symmetry
from commons.errors import DegeneracyError, DomainError, PrimitiveConsistencyError, ReducibleTriadError
from entity.lattice import PrimitivePair, Signs, WaveVector


def _det3(rows: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def irreducibility_det(k: WaveVector, m: WaveVector, n: WaveVector) -> int:
    """det of rows n, k, m with columns (v3^2, v2^2, v1^2)."""
    rows = [(v.n3 ** 2, v.n2 ** 2, v.n1 ** 2) for v in (n, k, m)]
    return _det3(rows)


def _third_index(i: int, j: int) -> int:
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise DomainError(f"indices must be in 1..3, got i={i}, j={j}")
    if i == j:
        raise DomainError(f"indices must be distinct, got i=j={i}")
    return 6 - i - j


def degeneracy_G(k: WaveVector, m: WaveVector, i: int, j: int) -> int:
    """G = k_i n_j m_l + k_l m_j n_i with n = k + m and (i, j, l) a permutation of (1, 2, 3)."""
    l = _third_index(i, j)
    n = k + m
    c = WaveVector.component
    return c(k, i) * c(n, j) * c(m, l) + c(k, l) * c(m, j) * c(n, i)


def _ratio(num: int, den: int, name: str) -> Fraction:
    if den == 0:
        raise DomainError(f"{name} is undefined: zero denominator")
    value = Fraction(num, den)
    if value in (0, 1, -1):
        raise ReducibleTriadError(f"reducible/degenerate case: {name} = {value}")
    return value


def decomposition_ratios(k: WaveVector, m: WaveVector, i: int, j: int) -> Tuple[Fraction, Fraction]:
    """alpha = (m_i k_l - m_l k_i)/(m_i k_l + m_l k_i), beta = (m_l k_j - m_j k_l)/(m_l k_j + m_j k_l)."""
    l = _third_index(i, j)
    ki, kj, kl = k.component(i), k.component(j), k.component(l)
    mi, mj, ml = m.component(i), m.component(j), m.component(l)
    alpha = _ratio(mi * kl - ml * ki, mi * kl + ml * ki, "alpha")
    beta = _ratio(ml * kj - mj * kl, ml * kj + mj * kl, "beta")
    return alpha, beta


def _divide(v: WaveVector, d: int, label: str) -> WaveVector:
    if any(c % d for c in v.as_tuple()):
        raise PrimitiveConsistencyError(f"{d} does not divide {label}={v}")
    return WaveVector(v.n1 // d, v.n2 // d, v.n3 // d)


def primitive_checks(pair: PrimitivePair) -> Dict[str, bool]:
    """Every invariant a primitive decomposition must satisfy."""
    kbar, mbar, d = pair.kbar, pair.mbar, pair.d
    first = (kbar.scaled(pair.a) + mbar.scaled(pair.b)).scaled(d)
    second = (apply_symmetry(pair.i, kbar).scaled(pair.a_prime) + apply_symmetry(pair.j, mbar).scaled(pair.b_prime)).scaled(d)
    return {
        "gcd_a_aprime": math.gcd(pair.a, pair.a_prime) == 1,
        "gcd_b_bprime": math.gcd(pair.b, pair.b_prime) == 1,
        "gcd_a_b": math.gcd(pair.a, pair.b) == 1,
        "gcd_aprime_bprime": math.gcd(pair.a_prime, pair.b_prime) == 1,
        "gcd_kbar_mbar": math.gcd(*kbar.as_tuple(), *mbar.as_tuple()) == 1,
        "first_decomposition": first == pair.n,
        "second_decomposition": second == pair.n,
        "alpha_admissible": pair.alpha not in (0, 1, -1) and pair.alpha == Fraction(pair.a_prime, pair.a),
        "beta_admissible": pair.beta not in (0, 1, -1) and pair.beta == Fraction(pair.b_prime, pair.b),
    }


def decompose_primitive(k: WaveVector, m: WaveVector, i: int, j: int) -> PrimitivePair:
    """Primitive generators of a degenerate triad (G_ij = 0)."""
    g = degeneracy_G(k, m, i, j)
    if g != 0:
        raise DegeneracyError(f"degeneracy condition violated: G_{i}{j} = {g}", G=g)
    alpha, beta = decomposition_ratios(k, m, i, j)
    a, a_prime = alpha.denominator, alpha.numerator
    b, b_prime = beta.denominator, beta.numerator
    kbar = _divide(k, a, "k")
    mbar = _divide(m, b, "m")
    d = math.gcd(*kbar.as_tuple(), *mbar.as_tuple())
    if d > 1:
        kbar = WaveVector(kbar.n1 // d, kbar.n2 // d, kbar.n3 // d)
        mbar = WaveVector(mbar.n1 // d, mbar.n2 // d, mbar.n3 // d)
    pair = PrimitivePair(
        kbar=kbar, mbar=mbar, n=k + m, a=a, b=b, a_prime=a_prime, b_prime=b_prime,
        i=i, j=j, alpha=alpha, beta=beta, d=d,
    )
    failed = [name for name, ok in primitive_checks(pair).items() if not ok]
    if failed:
        raise PrimitiveConsistencyError(f"primitive decomposition inconsistent: {', '.join(failed)}", failed=failed)
    return pair


def conjugate_triad(k: WaveVector, m: WaveVector, i: int, j: int) -> Tuple[WaveVector, WaveVector]:
    """The companion pair (alpha sigma_i(k), beta sigma_j(m)); it shares n with (k, m)."""
    alpha, beta = decomposition_ratios(k, m, i, j)
    k_tilde = [alpha * c for c in apply_symmetry(i, k).as_tuple()]
    m_tilde = [beta * c for c in apply_symmetry(j, m).as_tuple()]
    if any(c.denominator != 1 for c in k_tilde + m_tilde):
        raise PrimitiveConsistencyError("companion pair is not an integer pair")
    return WaveVector.of(int(c) for c in k_tilde), WaveVector.of(int(c) for c in m_tilde)


def transfer_signs(signs: Signs, alpha: Fraction, beta: Fraction, i: int, j: int) -> Signs:
    """Sign branch of the companion triad with the same residual as (k, m) on `signs`."""
    s_n, s_k, s_m = signs
    flip_k = (1 if alpha > 0 else -1) * (-1 if i == 3 else 1)
    flip_m = (1 if beta > 0 else -1) * (-1 if j == 3 else 1)
    return (s_n, s_k * flip_k, s_m * flip_m)


def synthesize_degenerate_pair(a: int, a_prime: int, b: int, b_prime: int, i: int, j: int) -> Optional[Tuple[WaveVector, WaveVector]]:
    """
    Degenerate pair (k, m) = (a kbar, b mbar) generated by primitive data; None when the
    data are inadmissible (gcd conditions, alpha/beta in {0, +-1}, or a catalytic n).
    """
    l = _third_index(i, j)
    if a <= 0 or b <= 0 or a_prime == 0 or b_prime == 0:
        return None
    if abs(a_prime) == a or abs(b_prime) == b:
        return None
    if math.gcd(a, a_prime) != 1 or math.gcd(b, b_prime) != 1 or math.gcd(a, b) != 1 or math.gcd(a_prime, b_prime) != 1:
        return None

    def reduced(x: int, y: int) -> Tuple[int, int]:
        g = math.gcd(x, y)
        return x // g, y // g

    kbar = [0, 0, 0]
    mbar = [0, 0, 0]
    kbar[i - 1], mbar[i - 1] = reduced(b_prime - b, a + a_prime)
    kbar[j - 1], mbar[j - 1] = reduced(b + b_prime, a_prime - a)
    kbar[l - 1], mbar[l - 1] = reduced(b_prime - b, a - a_prime)
    g = math.gcd(*kbar, *mbar)
    k = WaveVector.of(a * c // g for c in kbar)
    m = WaveVector.of(b * c // g for c in mbar)
    if (k + m).n3 == 0:
        return None
    return k, m
