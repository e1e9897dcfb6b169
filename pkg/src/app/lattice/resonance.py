"""
Three-wave resonance on the integer lattice.

ratio(v) = v3 / sqrt(theta1 v1^2 + theta2 v2^2 + theta3 v3^2) and a triad (k, m, n = k + m)
is resonant on branch (s_n, s_k, s_m) when s_n ratio(n) + s_k ratio(k) + s_m ratio(m) = 0.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from commons.config import config, section
from commons.constants import Constants as Co
from commons.errors import CatalyticTriadError, DomainError
from entity.catalog import TriadCatalog
from entity.lattice import LatticeParams, Signs, Triad, WaveVector

SIGN_BRANCHES: Tuple[Signs, ...] = tuple(itertools.product((1, -1), repeat=3))

# component flip patterns (sigma_1, sigma_2, sigma_3 and their products)
_FLIPS = tuple(itertools.product((1, -1), repeat=3))


def dispersion_ratio(v: WaveVector, p: LatticeParams) -> float:
    if v.is_zero():
        raise DomainError("dispersion ratio of the zero vector is undefined")
    return v.n3 / p.norm(v)


def require_strict(k: WaveVector, m: WaveVector) -> WaveVector:
    n = k + m
    if n.is_zero():
        raise DomainError(f"n = k + m vanishes for k={k}, m={m}")
    if k.n3 == 0 or m.n3 == 0 or n.n3 == 0:
        raise CatalyticTriadError(f"catalytic triad: k3*m3*n3 = 0 for k={k}, m={m}, n={n}")
    return n


def residual(k: WaveVector, m: WaveVector, p: LatticeParams, signs: Sequence[int]) -> float:
    """s_n ratio(n) + s_k ratio(k) + s_m ratio(m) with signs = (s_n, s_k, s_m)."""
    n = require_strict(k, m)
    s1, s2, s3 = signs
    return s1 * dispersion_ratio(n, p) + s2 * dispersion_ratio(k, p) + s3 * dispersion_ratio(m, p)


def best_branch(k: WaveVector, m: WaveVector, p: LatticeParams) -> Tuple[Signs, float]:
    """Sign branch with the strictly smallest |residual|; first in product order on ties."""
    best: Optional[Tuple[Signs, float]] = None
    for signs in SIGN_BRANCHES:
        value = residual(k, m, p, signs)
        if best is None or abs(value) < abs(best[1]):
            best = (signs, value)
    return best


def apply_symmetry(j: int, v: WaveVector) -> WaveVector:
    """sigma_j flips component j; sigma_0 is the identity."""
    if j not in (0, 1, 2, 3):
        raise DomainError(f"symmetry index must be in 0..3, got {j}")
    if j == 0:
        return v
    comps = list(v.as_tuple())
    comps[j - 1] = -comps[j - 1]
    return WaveVector.of(comps)


def _flip(v: WaveVector, pattern: Tuple[int, int, int]) -> WaveVector:
    return WaveVector(pattern[0] * v.n1, pattern[1] * v.n2, pattern[2] * v.n3)


def canonical_pair(k: WaveVector, m: WaveVector) -> Tuple[WaveVector, WaveVector]:
    """Lexicographically smallest (k, m) over flips, swap and homothety."""
    g = math.gcd(*k.as_tuple(), *m.as_tuple())
    if g == 0:
        raise DomainError("cannot canonicalize a zero pair")
    k = WaveVector(k.n1 // g, k.n2 // g, k.n3 // g)
    m = WaveVector(m.n1 // g, m.n2 // g, m.n3 // g)
    candidates = []
    for pattern in _FLIPS:
        fk, fm = _flip(k, pattern), _flip(m, pattern)
        candidates.append((fk.as_tuple() + fm.as_tuple(), fk, fm))
        candidates.append((fm.as_tuple() + fk.as_tuple(), fm, fk))
    _, ck, cm = min(candidates, key=lambda c: c[0])
    return ck, cm


def make_triad(k: WaveVector, m: WaveVector, p: LatticeParams) -> Triad:
    """Triad record for (k, m) on its best sign branch."""
    n = require_strict(k, m)
    signs, value = best_branch(k, m, p)
    s_n, s_k, s_m = signs
    lambdas = (s_k * p.norm(k), s_m * p.norm(m), s_n * p.norm(n))
    return Triad(k=k, m=m, n=n, signs=signs, lambdas=lambdas, residual=value, params=p)


def canonicalize(t: Triad) -> Triad:
    ck, cm = canonical_pair(t.k, t.m)
    return make_triad(ck, cm, t.params)


# =============================================================================
# Search
# =============================================================================

def _box_vectors(box: int) -> np.ndarray:
    r = np.arange(-box, box + 1)
    grid = np.array(np.meshgrid(r, r, r, indexing="ij")).reshape(3, -1).T
    return grid[grid[:, 2] != 0]


def _ratios(vectors: np.ndarray, p: LatticeParams) -> np.ndarray:
    v = vectors.astype(float)
    return v[:, 2] / np.sqrt(p.theta1 * v[:, 0] ** 2 + p.theta2 * v[:, 1] ** 2 + p.theta3 * v[:, 2] ** 2)


def _search_rows(args) -> List[Tuple[Tuple[int, int, int], Tuple[int, int, int]]]:
    """Resonant (k, m) pairs for the given row block of k vectors."""
    theta, box, tol, start, stop = args
    p = LatticeParams(*theta)
    vectors = _box_vectors(box)
    ratios = _ratios(vectors, p)
    hits = []
    for idx in range(start, stop):
        k = vectors[idx]
        n = vectors + k
        inside = np.all(np.abs(n) <= box, axis=1) & (n[:, 2] != 0)
        if not inside.any():
            continue
        m_sel = vectors[inside]
        rm = ratios[inside]
        rn = _ratios(n[inside], p)
        rk = ratios[idx]
        best = np.abs(rn + rk + rm)
        for a, b in ((1, -1), (-1, 1), (-1, -1)):
            best = np.minimum(best, np.abs(rn + a * rk + b * rm))
        for m in m_sel[best <= tol]:
            hits.append((tuple(int(x) for x in k), tuple(int(x) for x in m)))
    return hits


def search_triads(p: LatticeParams, box: int, tol: Optional[float] = None, workers: int = 1) -> TriadCatalog:
    """
    All canonical resonant triads with k, m, n = k + m inside [-box, box]^3 and nonzero
    vertical components. Entries are sorted by their canonical (k, m) tuple.
    """
    if box < 1:
        raise DomainError(f"box must be >= 1, got {box}")
    tol = section(config, Co.LATTICE).get("search_tol", 1e-12) if tol is None else tol
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")

    count = _box_vectors(box).shape[0]
    if workers > 1:
        bounds = np.linspace(0, count, workers + 1).astype(int)
        jobs = [(p.as_tuple(), box, tol, int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:])]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_search_rows, jobs))
        pairs = [pair for block in blocks for pair in block]
    else:
        pairs = _search_rows((p.as_tuple(), box, tol, 0, count))

    canon = {}
    for kt, mt in pairs:
        ck, cm = canonical_pair(WaveVector.of(kt), WaveVector.of(mt))
        canon[ck.as_tuple() + cm.as_tuple()] = (ck, cm)
    entries = [make_triad(ck, cm, p) for _, (ck, cm) in sorted(canon.items())]
    return TriadCatalog(params=p, box=box, tolerance=tol, entries=entries)
