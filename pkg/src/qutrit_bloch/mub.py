"""Construction of the four qutrit MUBs from two phase angles.

A pure state unbiased to the computational basis has amplitudes
(1, e^{i delta}, e^{i gamma})/sqrt(3) and weight n2 = 0.  Its remaining
chart parameters come in closed form through three complex sums

    z1 = e^{-i delta} + e^{-i(gamma-delta)} + e^{i gamma}
    z3 = e^{i delta} + w   e^{-i gamma} + w^2 e^{i(gamma-delta)}
    z4 = e^{i delta} + w^2 e^{-i gamma} + w   e^{i(gamma-delta)}

with w = e^{2 pi i/3}: z_k = 3 n_k e^{i theta_k}, equivalently
n1 = sqrt(3 + 2cos(gamma-2delta) + 2cos(2gamma-delta) + 2cos(gamma+delta))/3
and its two 2pi/3-shifted siblings (the radical is |z|/3; the complex
sum is used because it stays first-order accurate where n vanishes).

Orthogonal partners sit at (delta +- 2pi/3, gamma -+ 2pi/3): same
unsigned weights, different angles.  Shifting delta alone by 2pi/3 and
4pi/3 yields two more bases unbiased to the first, and together with
the computational basis they form a complete family of four MUBs whose
unsigned weight vectors permute cyclically on the axes (n1, n3, n4).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bloch import BlochParams, canonical_pair, from_density, to_density
from .errors import QutritBlochError

__all__ = ["KetRecord", "MubFamily", "ket_from_angles", "onb_from_ket", "four_mubs",
           "family_document"]

_OMEGA = cmath.exp(2j * math.pi / 3.0)
_ZERO = 3e-13  # on |z|; matches the chart's zero-weight floor of 1e-13
_CONSISTENCY_TOL = 1e-10


def _closed_form_params(delta: float, gamma: float) -> BlochParams:
    z1 = cmath.exp(-1j * delta) + cmath.exp(-1j * (gamma - delta)) + cmath.exp(1j * gamma)
    z3 = (cmath.exp(1j * delta) + _OMEGA * cmath.exp(-1j * gamma)
          + _OMEGA ** 2 * cmath.exp(1j * (gamma - delta)))
    z4 = (cmath.exp(1j * delta) + _OMEGA ** 2 * cmath.exp(-1j * gamma)
          + _OMEGA * cmath.exp(1j * (gamma - delta)))

    # the radical forms of the weights are |z|/3; keep them tied together
    radicals = (
        3.0 + 2.0 * math.cos(gamma - 2 * delta) + 2.0 * math.cos(2 * gamma - delta)
        + 2.0 * math.cos(gamma + delta),
        3.0 + 2.0 * math.cos(gamma - 2 * delta - 2 * math.pi / 3)
        + 2.0 * math.cos(2 * gamma - delta + 2 * math.pi / 3)
        + 2.0 * math.cos(gamma + delta - 2 * math.pi / 3),
        3.0 + 2.0 * math.cos(gamma - 2 * delta + 2 * math.pi / 3)
        + 2.0 * math.cos(2 * gamma - delta - 2 * math.pi / 3)
        + 2.0 * math.cos(gamma + delta + 2 * math.pi / 3),
    )
    pairs = []
    for z, rad in zip((z1, z3, z4), radicals):
        if abs(abs(z) ** 2 - rad) > 1e-12:
            raise QutritBlochError("weight radical disagrees with its complex sum")
        if abs(z) <= _ZERO:
            pairs.append((0.0, 0.0))
        else:
            pairs.append(canonical_pair(abs(z) / 3.0, cmath.phase(z)))
    (n1, t1), (n3, t3), (n4, t4) = pairs
    return BlochParams(n=(n1, 0.0, n3, n4), theta=(t1, 0.0, t3, t4))


def ket_from_angles(delta: float, gamma: float) -> tuple[np.ndarray, BlochParams]:
    """Amplitudes (1, e^{i delta}, e^{i gamma})/sqrt(3) and their chart
    parameters, cross-validated between the closed form and the general
    matrix extraction."""
    amps = np.array([1.0, cmath.exp(1j * delta), cmath.exp(1j * gamma)]) / math.sqrt(3.0)
    rho = np.outer(amps, amps.conj())
    params = from_density(rho)
    closed = _closed_form_params(delta, gamma)
    if np.max(np.abs(to_density(closed) - rho)) > _CONSISTENCY_TOL:
        raise QutritBlochError("closed-form chart parameters disagree with extraction")
    return amps, params


def onb_from_ket(delta: float, gamma: float) -> list[tuple[np.ndarray, BlochParams]]:
    """The orthonormal basis through (delta, gamma): partners at
    (delta + 2pi/3, gamma - 2pi/3) and (delta - 2pi/3, gamma + 2pi/3)."""
    third = 2.0 * math.pi / 3.0
    kets = [
        ket_from_angles(delta, gamma),
        ket_from_angles(delta + third, gamma - third),
        ket_from_angles(delta - third, gamma + third),
    ]
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(np.vdot(kets[i][0], kets[j][0])) > 1e-12:
                raise QutritBlochError("basis construction lost orthogonality")
    return kets


@dataclass(frozen=True)
class KetRecord:
    amplitudes: tuple[complex, complex, complex]
    bloch: BlochParams


@dataclass(frozen=True)
class MubFamily:
    """Four mutually unbiased bases: computational, then the three
    phase-built bases N, P, Q; weight_points are the unsigned weight
    4-vectors, one per basis."""

    delta: float
    gamma: float
    bases: tuple[tuple[KetRecord, KetRecord, KetRecord], ...]
    weight_points: tuple[tuple[float, float, float, float], ...]

    labels = ("computational", "N", "P", "Q")


def four_mubs(delta: float, gamma: float) -> MubFamily:
    """Complete MUB family seeded at (delta, gamma), validated for
    normalization, orthogonality, unbiasedness, shared weight points,
    and the cyclic weight permutation across N, P, Q."""
    third = 2.0 * math.pi / 3.0
    comp = []
    for k in range(3):
        amps = np.zeros(3, dtype=complex)
        amps[k] = 1.0
        comp.append((amps, from_density(np.outer(amps, amps.conj()))))
    raw_bases = [comp] + [onb_from_ket(delta + s * third, gamma) for s in (0, 1, 2)]

    vectors = [[amps for amps, _p in basis] for basis in raw_bases]
    for b, basis in enumerate(vectors):
        for ket in basis:
            if abs(np.vdot(ket, ket) - 1.0) > 1e-12:
                raise QutritBlochError(f"basis {b}: ket not normalized")
    for b1 in range(4):
        for b2 in range(b1 + 1, 4):
            for k1 in vectors[b1]:
                for k2 in vectors[b2]:
                    if abs(abs(np.vdot(k1, k2)) ** 2 - 1.0 / 3.0) > 1e-10:
                        raise QutritBlochError(f"bases {b1},{b2} are not unbiased")

    weight_points = []
    for basis in raw_bases:
        pts = [tuple(abs(v) for v in p.n) for _a, p in basis]
        for pt in pts[1:]:
            if max(abs(x - y) for x, y in zip(pt, pts[0])) > 1e-10:
                raise QutritBlochError("kets of one basis sit at different weight points")
        weight_points.append(pts[0])

    m1, _z, m3, m4 = weight_points[1]
    for got, expect in (
        (weight_points[2], (m4, 0.0, m1, m3)),
        (weight_points[3], (m3, 0.0, m4, m1)),
    ):
        if max(abs(x - y) for x, y in zip(got, expect)) > 1e-10:
            raise QutritBlochError("weight points do not permute cyclically")

    bases = tuple(
        tuple(KetRecord(tuple(complex(v) for v in amps), p) for amps, p in basis)
        for basis in raw_bases
    )
    return MubFamily(
        delta=float(delta),
        gamma=float(gamma),
        bases=bases,
        weight_points=tuple(tuple(float(v) for v in pt) for pt in weight_points),
    )


def family_document(fam: MubFamily) -> dict:
    """JSON-ready description of a MUB family."""
    return {
        "delta": fam.delta,
        "gamma": fam.gamma,
        "bases": [
            {
                "label": fam.labels[b],
                "weight_point": list(fam.weight_points[b]),
                "kets": [
                    {
                        "amplitudes": [[v.real, v.imag] for v in ket.amplitudes],
                        "bloch": {"n": list(ket.bloch.n), "theta": list(ket.bloch.theta)},
                    }
                    for ket in fam.bases[b]
                ],
            }
            for b in range(4)
        ],
    }
