"""Shared fixtures and oracles for the test suite.

Oracle policy: every library result checked here is compared against an
independent route - LAPACK eigensolvers instead of the closed-form
trigonometric one, permutation-expansion determinants, explicit matrix
assembly instead of chart arithmetic - so that implementation and
reference never share code.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from qutrit_bloch.bloch import BlochParams, from_density


# --- independent oracles ---------------------------------------------------


def oracle_eigvals(m) -> np.ndarray:
    """Ascending eigenvalues via LAPACK (independent of the library's
    closed-form route for 3x3)."""
    return np.linalg.eigvalsh(np.asarray(m, dtype=complex))


def oracle_det(m) -> complex:
    """Determinant by permutation expansion (no LU, no cofactors)."""
    a = np.asarray(m, dtype=complex)
    k = a.shape[0]
    total = 0.0 + 0.0j
    for perm in itertools.permutations(range(k)):
        sign = 1
        seen = [False] * k
        for start in range(k):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = sign + 0j
        for i in range(k):
            term *= a[i, perm[i]]
        total += term
    return total


def random_density(rng: np.random.Generator, rank: int = 3) -> np.ndarray:
    """Random density matrix assembled directly from Gaussian vectors
    (independent of the library's samplers)."""
    g = rng.standard_normal((3, rank)) + 1j * rng.standard_normal((3, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_params(rng: np.random.Generator) -> BlochParams:
    """Chart parameters of a random physical state."""
    return from_density(random_density(rng))


# --- fixtures ----------------------------------------------------------------


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260814)


# --- acceptance summary ------------------------------------------------------


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import acceptance_report

    if not acceptance_report.RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance checklist")
    for line in acceptance_report.summary_lines():
        terminalreporter.write_line(line)
