"""Physicality tests and rank classification in the weight/angle chart.

A unit-trace Hermitian 3x3 matrix is positive semidefinite iff the last
two coefficients of its characteristic polynomial are nonnegative:

    a2 = (1 - Tr rho^2) / 2 >= 0      (the unit 4-ball of weights)
    a3 = det rho >= 0.

The determinant has a closed trigonometric form in the Bloch chart;
27 * a3 equals the bracket

    1 - 3 |n|^2
      + 2 (n1^3 cos 3t1 + n2^3 cos 3t2 + n3^3 cos 3t3 + n4^3 cos 3t4)
      - 6 n1 n3 n4 cos(t1 - t3 - t4)
      + 6 n1 n2 n3 cos(t1 - t2 + t3 - pi/3)
      + 6 n2 n3 n4 cos(t2 + t3 - t4 + pi/3)
      + 6 n1 n2 n4 cos(t1 + t2 + t4 + pi/3).

Weight points (n alone) are classified by searching the angle torus for
a sign: the bracket is invariant under the nine shifts
theta += (2 pi / 3) * (a + b, 2a + b, a, b) with a, b in {0, 1, 2}, so a
fundamental domain keeps two angles on [0, 2 pi/3) and - when cross
terms survive - lets the rest run over the full circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import matcore
from .bloch import BlochParams, polar_weights, purity, to_density
from .errors import NotAState, NotPhysical, OutsideSphere

__all__ = [
    "CharCoeffs",
    "char_coeffs",
    "a3_closed_form",
    "a3_polar",
    "is_physical",
    "max_a3_over_theta",
    "is_point_physical",
    "RankReport",
    "rank_classify",
]

_TWO_THIRD_PI = 2.0 * np.pi / 3.0

# cross terms of the bracket: (weight triple, sign of the 6-coefficient,
# theta signs, constant phase)
_CROSS_TERMS = (
    ((0, 2, 3), -1.0, (1.0, -1.0, -1.0), 0.0),
    ((0, 1, 2), +1.0, (1.0, -1.0, +1.0), -np.pi / 3.0),
    ((1, 2, 3), +1.0, (1.0, +1.0, -1.0), +np.pi / 3.0),
    ((0, 1, 3), +1.0, (1.0, +1.0, +1.0), +np.pi / 3.0),
)


def _bracket(n: Sequence[float], t0, t1, t2, t3):
    """27 * a3 as a broadcast expression; t* may be arrays."""
    ts = (t0, t1, t2, t3)
    out = 1.0 - 3.0 * sum(v * v for v in n)
    for v, t in zip(n, ts):
        if v != 0.0:
            out = out + 2.0 * v ** 3 * np.cos(3.0 * t)
    for (i, j, k), sign, tsign, phase in _CROSS_TERMS:
        coef = 6.0 * sign * n[i] * n[j] * n[k]
        if coef != 0.0:
            ang = tsign[0] * ts[i] + tsign[1] * ts[j] + tsign[2] * ts[k] + phase
            out = out + coef * np.cos(ang)
    return out


@dataclass(frozen=True)
class CharCoeffs:
    """Characteristic polynomial coefficients det(xI - rho) = sum (-1)^k a_k x^{3-k}."""

    a0: float
    a1: float
    a2: float
    a3: float


def char_coeffs(rho) -> CharCoeffs:
    """Newton-identity coefficients from power traces."""
    a = matcore.as_matrix(rho)
    if a.shape != (3, 3):
        raise NotAState(f"expected 3x3, got {a.shape}")
    t1 = np.trace(a).real
    a2m = a @ a
    t2 = np.trace(a2m).real
    t3 = np.trace(a2m @ a).real
    e2 = (t1 * t1 - t2) / 2.0
    e3 = (t1 ** 3 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0
    return CharCoeffs(1.0, float(t1), float(e2), float(e3))


def a3_closed_form(p: BlochParams) -> float:
    """det rho straight from the trigonometric bracket (no matrix built)."""
    return float(_bracket(p.n, *p.theta)) / 27.0


def a3_polar(r: float, zeta: Sequence[float], theta: Sequence[float]) -> tuple[float, float]:
    """Radial form of the bracket: returns (value, F) with

        value = 27 * a3 = 1 - 3 r^2 + 2 r^3 F,   F in [-1, 1].

    F carries the whole angular dependence; at the origin it is set to 0
    by convention (the bracket is 1 there regardless).
    """
    r = float(r)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    n = polar_weights(r, zeta)
    value = float(_bracket(tuple(n), *(float(t) for t in theta)))
    if r == 0.0:
        return value, 0.0
    f = (value - 1.0 + 3.0 * r * r) / (2.0 * r ** 3)
    return value, float(f)


def is_physical(p: BlochParams, tol: float = 1e-10) -> bool:
    """Positive semidefinite iff inside the unit ball and a3 >= 0."""
    if sum(v * v for v in p.n) > 1.0 + tol:
        return False
    return a3_closed_form(p) >= -tol


# --- weight-point feasibility (search over angles) ----------------------


def _grid_axes(n: Sequence[float], grid_steps: int):
    """Angle grids forming a fundamental domain of the shift symmetry.

    Zero-weight angles are pinned to 0.  With at most two active
    weights every surviving term has period 2 pi / 3 in each angle; with
    three or four, the cross terms tie angles together and the domain
    keeps the first one (respectively two) of the active angles on the
    full circle while the rest stay on [0, 2 pi / 3).
    """
    free = [i for i in range(4) if abs(n[i]) > 1e-14]
    step = _TWO_THIRD_PI / grid_steps
    reduced = np.arange(grid_steps) * step
    full = np.arange(3 * grid_steps) * step
    n_full = 0 if len(free) <= 2 else (1 if len(free) == 3 else 2)
    axes: list[np.ndarray | float] = [0.0, 0.0, 0.0, 0.0]
    for rank, i in enumerate(free):
        axes[i] = full if rank < n_full else reduced
    return free, axes, step


def _grid_max(n: Sequence[float], axes, chunk_limit: int = 1 << 21):
    """Max of the bracket over the grid, chunking the largest axis."""
    array_axes = [i for i in range(4) if isinstance(axes[i], np.ndarray)]
    if not array_axes:
        return float(_bracket(n, *axes)), [0.0 if not isinstance(a, np.ndarray) else a for a in axes]
    shapes = {i: len(axes[i]) for i in array_axes}
    # reshape each axis array for broadcasting
    def shaped(i, arr):
        sh = [1] * len(array_axes)
        sh[array_axes.index(i)] = len(arr)
        return arr.reshape(sh)

    total = int(np.prod(list(shapes.values())))
    lead = array_axes[0]
    lead_arr = axes[lead]
    per_slice = total // shapes[lead]
    chunk = max(1, min(shapes[lead], chunk_limit // max(per_slice, 1)))

    best_val = -np.inf
    best_theta: list[float] = [a if not isinstance(a, np.ndarray) else 0.0 for a in axes]
    for start in range(0, shapes[lead], chunk):
        part = lead_arr[start : start + chunk]
        targs = []
        for i in range(4):
            if i == lead:
                targs.append(shaped(i, part))
            elif isinstance(axes[i], np.ndarray):
                targs.append(shaped(i, axes[i]))
            else:
                targs.append(axes[i])
        vals = _bracket(n, *targs)
        vals = np.broadcast_to(vals, tuple(len(part) if i == 0 else shapes[a] for i, a in enumerate(array_axes)))
        idx = int(np.argmax(vals))
        v = float(vals.flat[idx])
        if v > best_val:
            best_val = v
            unravel = np.unravel_index(idx, vals.shape)
            for pos, i in enumerate(array_axes):
                if i == lead:
                    best_theta[i] = float(part[unravel[pos]])
                else:
                    best_theta[i] = float(axes[i][unravel[pos]])
    return best_val, best_theta


def _ascend(n: Sequence[float], theta: list[float], free: list[int], step0: float,
            max_iters: int = 200, min_gain: float = 1e-12) -> tuple[float, list[float]]:
    """Coordinate ascent on the bracket, halving the step when stuck."""
    best = float(_bracket(n, *theta))
    step = step0
    for _ in range(max_iters):
        improved = False
        for i in free:
            base = theta[i]
            for cand in (base + step, base - step):
                theta[i] = cand
                v = float(_bracket(n, *theta))
                if v > best + min_gain:
                    best = v
                    base = cand
                    improved = True
                else:
                    theta[i] = base
            theta[i] = base
        if not improved:
            step *= 0.5
            if step < min_gain:
                break
    return best, theta


def max_a3_over_theta(n: Sequence[float], grid_steps: int = 48, refine: bool = True
                      ) -> tuple[float, tuple[float, float, float, float]]:
    """Largest achievable a3 = det rho over all angles at a fixed weight
    point, with the maximizing angles.  Grid search over a fundamental
    domain, optionally polished by coordinate ascent."""
    n = tuple(float(v) for v in n)
    if len(n) != 4:
        raise ValueError("weight point must have four entries")
    free, axes, step = _grid_axes(n, grid_steps)
    val, theta = _grid_max(n, axes)
    if refine and free:
        val, theta = _ascend(n, list(theta), free, step / 2.0)
    return val / 27.0, tuple(theta)


def is_point_physical(n: Sequence[float], grid_steps: int = 48, refine: bool = True,
                      tol: float = 1e-10) -> bool:
    """Does any angle assignment make this weight point a state?"""
    n = tuple(float(v) for v in n)
    r2 = sum(v * v for v in n)
    if r2 > 1.0 + tol:
        raise OutsideSphere(f"|n|^2 = {r2:.6f} exceeds 1")
    # quick reject: even with every trig factor at its own optimum the
    # bracket cannot reach -27 tol
    ceiling = 1.0 - 3.0 * r2 + 2.0 * sum(abs(v) ** 3 for v in n)
    for (i, j, k), _sign, _tsign, _phase in _CROSS_TERMS:
        ceiling += 6.0 * abs(n[i] * n[j] * n[k])
    if ceiling < -27.0 * tol:
        return False
    a3max, _ = max_a3_over_theta(n, grid_steps=grid_steps, refine=refine)
    return a3max >= -tol


# --- rank regions --------------------------------------------------------

_PURITY_GATE = 1e-8


@dataclass(frozen=True)
class RankReport:
    rank: int
    region: str  # "surface" | "shell" | "core"
    consistent: bool


def rank_classify(p: BlochParams, tol: float = 1e-10) -> RankReport:
    """Numerical rank plus the radial region it should belong to.

    Surface (|n| = 1) states are pure, the open ball of radius 1/2 is
    all rank 3, and the shell in between holds ranks 2 and 3.
    """
    if not is_physical(p, tol):
        raise NotPhysical("rank classification requires a physical state")
    eigs = matcore.herm_eigvals(to_density(p))
    rank = int(np.sum(eigs > tol))
    r = p.radius
    if abs(purity(p) - 1.0) <= _PURITY_GATE:
        region = "surface"
        consistent = rank == 1
    elif r < 0.5:
        region = "core"
        consistent = rank == 3
    else:
        region = "shell"
        consistent = rank in (2, 3)
    return RankReport(rank, region, consistent)
