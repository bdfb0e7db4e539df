"""State geometry in the weights/angles chart.

Traces of products collapse to trigonometric sums of the paired
coefficients, so overlaps and Hilbert-Schmidt distances need no
matrices.  A small explorer samples Haar-random orthonormal bases and
tabulates how the weight vectors of basis partners relate (same point,
antipodal, or neither) - an observational aid for the open question of
where orthogonal states sit in the ball; it asserts nothing.
"""

from __future__ import annotations

import math

import numpy as np

from .bloch import BlochParams, from_density, purity
from .ensembles import as_rng, haar_unitary
from .errors import NotPhysical, NotPure
from .positivity import is_physical

__all__ = [
    "overlap",
    "is_orthogonal",
    "is_mub_pair",
    "pair_diagnostics",
    "hs_distance",
    "conjecture1_explore",
]

_PURE_TOL = 1e-8


def overlap(a: BlochParams, b: BlochParams) -> float:
    """Tr(rho_a rho_b) = (1/3)(1 + 2 sum n_a n_b cos(theta_a - theta_b))."""
    for p in (a, b):
        if not is_physical(p):
            raise NotPhysical("overlap formula requires physical states")
    acc = sum(
        na * nb * math.cos(ta - tb)
        for na, ta, nb, tb in zip(a.n, a.theta, b.n, b.theta)
    )
    return (1.0 + 2.0 * acc) / 3.0


def _require_pure(p: BlochParams) -> None:
    if abs(purity(p) - 1.0) > _PURE_TOL:
        raise NotPure(f"purity {purity(p):.10f} is not 1 within {_PURE_TOL}")


def is_orthogonal(a: BlochParams, b: BlochParams, tol: float = 1e-10) -> bool:
    """Zero overlap between two pure states."""
    _require_pure(a)
    _require_pure(b)
    return overlap(a, b) <= tol


def is_mub_pair(a: BlochParams, b: BlochParams, tol: float = 1e-10) -> bool:
    """Unbiased pair of pure states: squared overlap exactly 1/3."""
    _require_pure(a)
    _require_pure(b)
    return abs(overlap(a, b) - 1.0 / 3.0) <= tol


def pair_diagnostics(a: BlochParams, b: BlochParams) -> dict:
    """Reduced-form indicators behind the orthogonality condition: when
    all angle differences vanish, orthogonality forces the weight dot
    product to cos(2 pi / 3) = -1/2; when cos of the differences is
    constant, it forces weight orthogonality."""
    dot = sum(na * nb for na, nb in zip(a.n, b.n))
    dtheta = [ta - tb for ta, tb in zip(a.theta, b.theta)]
    active = [i for i in range(4) if a.n[i] != 0.0 and b.n[i] != 0.0]
    cosines = [math.cos(dtheta[i]) for i in active]
    equal_angles = all(abs(dtheta[i]) <= 1e-12 for i in active)
    constant_cos = (max(cosines) - min(cosines) <= 1e-12) if cosines else True
    return {
        "overlap": overlap(a, b),
        "weight_dot": dot,
        "equal_angles": equal_angles,
        "weight_dot_minus_cos_2pi3": dot - math.cos(2.0 * math.pi / 3.0),
        "constant_cos_dtheta": constant_cos,
        "weight_dot_if_constant": dot if constant_cos else None,
    }


def hs_distance(a: BlochParams, b: BlochParams) -> float:
    """sqrt(Tr (rho_a - rho_b)^2) in chart coordinates."""
    acc = sum(
        na * na + nb * nb - 2.0 * na * nb * math.cos(ta - tb)
        for na, ta, nb, tb in zip(a.n, a.theta, b.n, b.theta)
    )
    return math.sqrt(2.0 / 3.0) * math.sqrt(max(acc, 0.0))


def _classify_pair(a: BlochParams, b: BlochParams, tol: float):
    na = np.array(a.n)
    nb = np.array(b.n)
    dev_same = float(np.max(np.abs(na - nb)))
    dev_anti = float(np.max(np.abs(na + nb)))
    dev_unsigned = float(np.max(np.abs(np.abs(na) - np.abs(nb))))
    if dev_same <= tol:
        kind = "same_point"
    elif dev_anti <= tol:
        kind = "antipodal"
    else:
        kind = "neither"
    return kind, dev_unsigned <= tol, min(dev_same, dev_anti, dev_unsigned)


def conjecture1_explore(trials: int, seed, tol: float = 1e-8) -> dict:
    """Sample Haar-random orthonormal bases and tabulate the pairwise
    weight-vector relations of their kets.

    Counts are over ket pairs (three per basis).  `same_weights`
    additionally counts pairs whose unsigned weights agree - the
    invariant the closed MUB constructions realize.  Observational
    only: no judgment is made.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = as_rng(seed)
    counts = {"same_point": 0, "antipodal": 0, "neither": 0}
    same_weights = 0
    worst = 0.0
    for _ in range(trials):
        u = haar_unitary(rng)
        params = [from_density(np.outer(u[:, k], u[:, k].conj())) for k in range(3)]
        for i in range(3):
            for j in range(i + 1, 3):
                kind, unsigned_same, dev = _classify_pair(params[i], params[j], tol)
                counts[kind] += 1
                same_weights += int(unsigned_same)
                worst = max(worst, dev)
    return {
        "trials": int(trials),
        "same_point": counts["same_point"],
        "antipodal": counts["antipodal"],
        "neither": counts["neither"],
        "same_weights": same_weights,
        "worst_deviation": worst,
    }
