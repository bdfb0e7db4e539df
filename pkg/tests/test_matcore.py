"""Matrix-core contracts: shape validation, Hermitian eigenvalues
against a LAPACK oracle and moment identities, determinants against
permutation expansion, and the bounded Kronecker product."""

import numpy as np
import pytest

from conftest import oracle_det, oracle_eigvals, random_density
from qutrit_bloch import matcore
from qutrit_bloch.errors import DimensionOverflow, DimensionUnsupported, NonHermitian


def test_as_matrix_accepts_square_complex():
    m = matcore.as_matrix([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m.dtype == complex


def test_as_matrix_rejects_non_square():
    with pytest.raises(ValueError):
        matcore.as_matrix(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        matcore.as_matrix(np.zeros(4))


def test_herm_eigvals_matches_lapack_3x3(rng):
    worst = 0.0
    for _ in range(300):
        rho = random_density(rng)
        got = matcore.herm_eigvals(rho)
        ref = oracle_eigvals(rho)
        worst = max(worst, float(np.max(np.abs(got - ref))))
        assert got[0] <= got[1] <= got[2]
    assert worst < 1e-12


def test_herm_eigvals_2x2(rng):
    for _ in range(50):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        h = g + g.conj().T
        got = matcore.herm_eigvals(h)
        ref = oracle_eigvals(h)
        assert np.max(np.abs(got - ref)) < 1e-12


def test_herm_eigvals_9x9_moment_oracle(rng):
    """Power-trace moments k=1..9 determine the spectrum of a 9x9
    Hermitian matrix; checking all of them is a complete verification
    that does not call any eigensolver."""
    g = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
    h = (g + g.conj().T) / 2.0
    eigs = matcore.herm_eigvals(h)
    power = np.eye(9, dtype=complex)
    for k in range(1, 10):
        power = power @ h
        moment = float(np.trace(power).real)
        assert abs(np.sum(eigs**k) - moment) <= 1e-9 * max(1.0, abs(moment))


def test_herm_eigvals_degenerate_exact():
    got = matcore.herm_eigvals(np.eye(3, dtype=complex) / 3.0)
    assert np.max(np.abs(got - 1.0 / 3.0)) < 1e-15


def test_herm_eigvals_rejects_non_hermitian():
    bad = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    with pytest.raises(NonHermitian):
        matcore.herm_eigvals(bad)


def test_herm_eigvals_rejects_unsupported_dim():
    with pytest.raises(DimensionUnsupported):
        matcore.herm_eigvals(np.eye(4, dtype=complex))


def test_det_matches_permutation_expansion(rng):
    for _ in range(100):
        g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        got = matcore.det(g)
        ref = oracle_det(g)
        assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref))


def test_kron_index_formula(rng):
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    b = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    k = matcore.kron(a, b)
    assert k.shape == (9, 9)
    for i in range(9):
        for j in range(9):
            assert k[i, j] == pytest.approx(a[i // 3, j // 3] * b[i % 3, j % 3], abs=1e-15)


def test_kron_caps_output_size():
    big = np.eye(9, dtype=complex)
    with pytest.raises(DimensionOverflow):
        matcore.kron(big, big)
