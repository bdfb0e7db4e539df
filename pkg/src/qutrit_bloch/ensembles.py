"""Random qutrit ensembles and their closed-form densities.

Samplers (Ginibre-based, seeded via numpy's PCG64 `default_rng`):

    Hilbert-Schmidt:  rho = G G* / Tr(G G*)
    Bures:            rho = (I+U) G G* (I+U*) / Tr(...),  U Haar random.

Per sample the generator is consumed in a fixed order (real then
imaginary Ginibre block, then - for Bures - the unitary's block), so a
batch of size k reproduces the first k samples of any larger batch.

Density evaluators (normalization constants set to 1 throughout; every
statistical test is a shape/ratio test):

    simplex:  HS     prod_{j<k} (l_j - l_k)^2
              Bures  prod (l_j - l_k)^2 / [ sqrt(prod l) prod (l_j + l_k) ]
    radial/angular (weights chart, D = det rho):
              HS     ((r-1)^2 (2r+1) - 27 D)((r+1)^2 (2r-1) + 27 D) / (27 r^3)
              Bures  same numerator / (27 r^3 ((1-r^2)/3 - D) sqrt(D))
    qubit:    HS 3/(4 pi);   Bures 4 / (pi sqrt(1 - r^2)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import matcore
from .bloch import BlochParams, from_density, polar_weights, to_density
from .errors import DegenerateBures, OriginSingularity, OutsideSphere

__all__ = [
    "EnsembleSample",
    "as_rng",
    "ginibre",
    "haar_unitary",
    "sample_rhos",
    "sample_hs",
    "sample_bures",
    "sample_batch",
    "hs_density_simplex",
    "bures_density_simplex",
    "hs_density_bloch",
    "bures_density_bloch",
    "qubit_hs_density",
    "qubit_bures_density",
    "identity_checks",
]

MEASURES = ("hs", "bures")


def as_rng(seed_or_rng) -> np.random.Generator:
    """Accept either a seed or a ready generator."""
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def ginibre(rng: np.random.Generator, dim: int = 3) -> np.ndarray:
    """Square matrix of independent standard complex Gaussians."""
    blocks = rng.standard_normal((2, dim, dim))
    return (blocks[0] + 1j * blocks[1]) / math.sqrt(2.0)


def haar_unitary(rng: np.random.Generator, dim: int = 3) -> np.ndarray:
    """QR of a Ginibre matrix with the R-diagonal phase fix."""
    q, r = np.linalg.qr(ginibre(rng, dim))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def sample_rhos(measure: str, count: int, seed_or_rng) -> np.ndarray:
    """(count, 3, 3) stack of density matrices; deterministic per seed."""
    if measure not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}, got {measure!r}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = as_rng(seed_or_rng)
    n_blocks = 2 if measure == "hs" else 4
    blocks = rng.standard_normal((count, n_blocks, 3, 3))
    g = (blocks[:, 0] + 1j * blocks[:, 1]) / math.sqrt(2.0)
    if measure == "hs":
        w = g @ g.conj().transpose(0, 2, 1)
    else:
        a = (blocks[:, 2] + 1j * blocks[:, 3]) / math.sqrt(2.0)
        q, r = np.linalg.qr(a)
        d = np.diagonal(r, axis1=1, axis2=2)
        u = q * (d / np.abs(d))[:, np.newaxis, :]
        m = (np.eye(3) + u) @ g
        w = m @ m.conj().transpose(0, 2, 1)
    traces = np.trace(w, axis1=1, axis2=2).real
    return w / traces[:, np.newaxis, np.newaxis]


@dataclass(frozen=True)
class EnsembleSample:
    """One sampled state with its derived coordinates."""

    rho: np.ndarray
    eigs: tuple[float, float, float]
    bloch: BlochParams
    r: float
    det: float
    measure: str

    @property
    def purity(self) -> float:
        return (1.0 + 2.0 * self.r * self.r) / 3.0


def _record(rho: np.ndarray, measure: str) -> EnsembleSample:
    eigs = tuple(float(x) for x in matcore.herm_eigvals(rho))
    p = from_density(rho)
    return EnsembleSample(
        rho=rho,
        eigs=eigs,
        bloch=p,
        r=p.radius,
        det=float(matcore.det(rho).real),
        measure=measure,
    )


def sample_hs(seed_or_rng) -> EnsembleSample:
    """One Hilbert-Schmidt draw (equals the first entry of any batch)."""
    return _record(sample_rhos("hs", 1, seed_or_rng)[0], "hs")


def sample_bures(seed_or_rng) -> EnsembleSample:
    """One Bures draw (equals the first entry of any batch)."""
    return _record(sample_rhos("bures", 1, seed_or_rng)[0], "bures")


def sample_batch(measure: str, count: int, seed_or_rng) -> list[EnsembleSample]:
    return [_record(rho, measure) for rho in sample_rhos(measure, count, seed_or_rng)]


# --- densities on the eigenvalue simplex ---------------------------------


def _check_simplex(eigs: Sequence[float]) -> tuple[float, float, float]:
    lam = tuple(float(x) for x in eigs)
    if len(lam) != 3:
        raise ValueError("expected three eigenvalues")
    if abs(sum(lam) - 1.0) > 1e-10:
        raise ValueError(f"eigenvalues must sum to 1, got {sum(lam)!r}")
    if min(lam) < -1e-12:
        raise ValueError("eigenvalues must be nonnegative")
    return lam


def hs_density_simplex(eigs: Sequence[float]) -> float:
    """Unnormalized Hilbert-Schmidt weight: squared Vandermonde."""
    l1, l2, l3 = _check_simplex(eigs)
    return ((l1 - l2) * (l1 - l3) * (l2 - l3)) ** 2


def bures_density_simplex(eigs: Sequence[float]) -> float:
    """Unnormalized Bures weight; needs strictly positive eigenvalues."""
    lam = _check_simplex(eigs)
    if min(lam) <= 0.0:
        raise DegenerateBures("Bures simplex density needs all eigenvalues > 0")
    l1, l2, l3 = lam
    num = ((l1 - l2) * (l1 - l3) * (l2 - l3)) ** 2
    den = math.sqrt(l1 * l2 * l3) * (l1 + l2) * (l1 + l3) * (l2 + l3)
    return num / den


# --- densities in the weights chart --------------------------------------


def _det_from_polar(r: float, zeta: Sequence[float], theta: Sequence[float]) -> float:
    n = polar_weights(r, zeta)
    if sum(v * v for v in n) > 1.0 + 1e-9:
        raise OutsideSphere("radius exceeds the unit sphere")
    p = BlochParams.canonical(n, theta)
    return float(matcore.det(to_density(p)).real)


def _hs_bloch_parts(r: float, zeta, theta) -> tuple[float, float]:
    if r == 0.0:
        raise OriginSingularity("radial density has a 1/r^3 prefactor")
    d = _det_from_polar(r, zeta, theta)
    num = ((r - 1.0) ** 2 * (2.0 * r + 1.0) - 27.0 * d) * (
        (r + 1.0) ** 2 * (2.0 * r - 1.0) + 27.0 * d
    )
    return num, d


def hs_density_bloch(r: float, zeta: Sequence[float], theta: Sequence[float]) -> float:
    """Hilbert-Schmidt radial/angular density (constant set to 1)."""
    r = float(r)
    num, _d = _hs_bloch_parts(r, zeta, theta)
    return num / (27.0 * r ** 3)


def bures_density_bloch(r: float, zeta: Sequence[float], theta: Sequence[float],
                        signed: bool = False) -> float:
    """Bures radial/angular density (constant set to 1).

    Defined only where det rho > 0 and (1 - r^2)/3 - det rho > 0; outside
    that region it raises, or - with signed=True - returns the diagnostic
    obtained by reading sqrt(D) as sign(D) sqrt|D|, whose sign change
    marks the boundary of the physical body.
    """
    r = float(r)
    num, d = _hs_bloch_parts(r, zeta, theta)
    gap = (1.0 - r * r) / 3.0 - d
    if d <= 0.0 or gap <= 0.0:
        if not signed:
            raise DegenerateBures(
                f"Bures density undefined here: det = {d:.3e}, (1-r^2)/3 - det = {gap:.3e}"
            )
        if d == 0.0 or gap == 0.0:
            raise DegenerateBures("denominator vanishes exactly; no finite diagnostic")
        root = math.copysign(math.sqrt(abs(d)), d)
        return num / (27.0 * r ** 3 * gap * root)
    return num / (27.0 * r ** 3 * gap * math.sqrt(d))


def qubit_hs_density(r: float) -> float:
    """Flat over the qubit ball."""
    if not 0.0 <= r <= 1.0:
        raise OutsideSphere("qubit radius must lie in [0, 1]")
    return 3.0 / (4.0 * math.pi)


def qubit_bures_density(r: float) -> float:
    """Diverges toward the qubit surface."""
    if not 0.0 <= r < 1.0:
        raise OutsideSphere("qubit Bures density needs 0 <= r < 1")
    return 4.0 / (math.pi * math.sqrt(1.0 - r * r))


# --- discriminant identities ---------------------------------------------


def identity_checks(sample_count: int, seed) -> dict:
    """Verify on random HS draws that the closed forms match eigenvalue
    arithmetic: (a) prod(l_j + l_k) = (1-r^2)/3 - det, (b) prod l = det,
    (c) the radial HS numerator / 27 equals the squared Vandermonde.
    Returns max relative errors; near-degenerate draws are skipped.
    """
    rng = as_rng(seed)
    rhos = sample_rhos("hs", sample_count, rng)
    worst = {"sum_pairs": 0.0, "det": 0.0, "hs_numerator": 0.0}
    skipped = 0
    for rho in rhos:
        l1, l2, l3 = matcore.herm_eigvals(rho)
        vandermonde = ((l1 - l2) * (l1 - l3) * (l2 - l3)) ** 2
        if vandermonde < 1e-14:
            skipped += 1
            continue
        p = from_density(rho)
        r = p.radius
        d = float(matcore.det(rho).real)
        pair_prod = (l1 + l2) * (l1 + l3) * (l2 + l3)
        gap = (1.0 - r * r) / 3.0 - d
        num = ((r - 1.0) ** 2 * (2.0 * r + 1.0) - 27.0 * d) * (
            (r + 1.0) ** 2 * (2.0 * r - 1.0) + 27.0 * d
        )
        worst["sum_pairs"] = max(worst["sum_pairs"], abs(gap - pair_prod) / abs(pair_prod))
        worst["det"] = max(worst["det"], abs(d - l1 * l2 * l3) / max(abs(d), 1e-300))
        worst["hs_numerator"] = max(
            worst["hs_numerator"], abs(num / 27.0 - vandermonde) / vandermonde
        )
    return {
        "count": int(sample_count),
        "skipped_near_degenerate": skipped,
        "max_rel_sum_pairs": worst["sum_pairs"],
        "max_rel_det": worst["det"],
        "max_rel_hs_numerator": worst["hs_numerator"],
    }
