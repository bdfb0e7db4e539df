"""Unital qutrit channels diagonal in the displacement-operator basis.

Such a channel multiplies each expansion coefficient by a complex
eigenvalue; Hermiticity ties the nine eigenvalues into one trivial
entry (1, trace), and four modulus/phase pairs mirroring the state
chart's pairing.  On chart parameters the action is simply
n_i -> lambda_i n_i, theta_i -> theta_i + phi_i.

Complete positivity is decided by the 9x9 Choi matrix.  At phi = 0 it
is equivalent to five linear inequalities in lambda

    1 + 2 lambda_i - sum_{j != i} lambda_j >= 0   (i = 1..4)
    1 + 2 (lambda_1 + lambda_2 + lambda_3 + lambda_4) >= 0

whose feasible set is the convex hull of five explicit vertices.  Edge
enumeration is done honestly from active-constraint ranks, not from a
hard-coded list.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import matcore
from .bloch import BlochParams, canonical_pair, from_density, to_density
from .weyl import weyl_op

__all__ = [
    "UnitalMap",
    "lambda_table",
    "apply",
    "apply_to_matrix",
    "choi_matrix",
    "is_cp",
    "polytope_check",
    "polytope_vertices",
    "edge_lengths",
]

# (p, q) -> (slot 0..3, sign of the phase) per the conjugate pairing
_EIGENVALUE_SLOTS = {
    (0, 1): (0, +1.0), (0, 2): (0, -1.0),
    (1, 0): (1, +1.0), (2, 0): (1, -1.0),
    (1, 2): (2, +1.0), (2, 1): (2, -1.0),
    (2, 2): (3, +1.0), (1, 1): (3, -1.0),
}


@dataclass(frozen=True)
class UnitalMap:
    """Four moduli (may be negative) and four phases."""

    lam: tuple[float, float, float, float]
    phi: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(float(v) for v in self.lam))
        object.__setattr__(self, "phi", tuple(float(v) for v in self.phi))
        if len(self.lam) != 4 or len(self.phi) != 4:
            raise ValueError("lam and phi must have four entries each")
        if not all(math.isfinite(v) for v in self.lam + self.phi):
            raise ValueError("non-finite channel parameter")


def lambda_table(m: UnitalMap) -> dict[tuple[int, int], complex]:
    """All nine eigenvalues keyed by operator index; (0,0) is fixed at 1."""
    table = {(0, 0): 1.0 + 0.0j}
    for key, (slot, sign) in _EIGENVALUE_SLOTS.items():
        table[key] = m.lam[slot] * cmath.exp(1j * sign * m.phi[slot])
    return table


def apply(m: UnitalMap, p: BlochParams) -> BlochParams:
    """Chart-level action: scale weights, shift angles, re-canonicalize."""
    n = [lv * nv for lv, nv in zip(m.lam, p.n)]
    theta = [tv + fv for tv, fv in zip(p.theta, m.phi)]
    return BlochParams.canonical(n, theta)


def apply_to_matrix(m: UnitalMap, x) -> np.ndarray:
    """Operator-level action on any 3x3 matrix (not just states)."""
    a = matcore.as_matrix(x)
    if a.shape != (3, 3):
        raise ValueError("channel acts on 3x3 matrices")
    out = np.zeros((3, 3), dtype=complex)
    for (p, q), lam in lambda_table(m).items():
        u = weyl_op(p, q)
        out += lam * np.vdot(u, a) * u
    return out / 3.0


def choi_matrix(m: UnitalMap) -> np.ndarray:
    """C = sum_ij E_ij (x) Phi(E_ij), assembled entry block by block."""
    c = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        for j in range(3):
            e = np.zeros((3, 3), dtype=complex)
            e[i, j] = 1.0
            c += matcore.kron(e, apply_to_matrix(m, e))
    return c


def is_cp(m: UnitalMap, tol: float = 1e-9) -> bool:
    """Complete positivity via the smallest Choi eigenvalue."""
    eigs = matcore.herm_eigvals(choi_matrix(m), tol=1e-8)
    return float(eigs[0]) >= -tol


# --- the phi = 0 polytope -------------------------------------------------

# rows: coefficient vector c with constraint 1 + c . lambda >= 0
_CONSTRAINTS = np.array(
    [
        [2.0, -1.0, -1.0, -1.0],
        [-1.0, 2.0, -1.0, -1.0],
        [-1.0, -1.0, 2.0, -1.0],
        [-1.0, -1.0, -1.0, 2.0],
        [2.0, 2.0, 2.0, 2.0],
    ]
)


def polytope_check(lam: Sequence[float]) -> tuple[bool, tuple[float, float, float, float, float]]:
    """Evaluate the five inequalities; returns (all hold, slack vector)."""
    lam = np.asarray([float(v) for v in lam])
    if lam.shape != (4,):
        raise ValueError("lambda must have four entries")
    slacks = 1.0 + _CONSTRAINTS @ lam
    return bool(np.all(slacks >= -1e-12)), tuple(float(s) for s in slacks)


def polytope_vertices() -> tuple[tuple[float, float, float, float], ...]:
    """The five extreme channels of the phi = 0 region."""
    out = [(1.0, 1.0, 1.0, 1.0)]
    for i in range(4):
        v = [-0.5] * 4
        v[i] = 1.0
        out.append(tuple(v))
    return tuple(out)


def edge_lengths(active_tol: float = 1e-9) -> tuple[float, ...]:
    """Euclidean lengths of the polytope's edges, sorted.

    A vertex pair spans an edge iff the constraints active at both ends
    have normal rank 3 (a one-dimensional face of a 4D polytope).  The
    enumeration is computed, not assumed, so it doubles as a check of
    any claimed edge count.
    """
    verts = polytope_vertices()
    lengths = []
    for a, b in itertools.combinations(verts, 2):
        sa = 1.0 + _CONSTRAINTS @ np.asarray(a)
        sb = 1.0 + _CONSTRAINTS @ np.asarray(b)
        common = (np.abs(sa) <= active_tol) & (np.abs(sb) <= active_tol)
        if not np.any(common):
            continue
        rank = np.linalg.matrix_rank(_CONSTRAINTS[common])
        if rank == 3:
            lengths.append(float(np.linalg.norm(np.asarray(a) - np.asarray(b))))
    return tuple(sorted(lengths))
