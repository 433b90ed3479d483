import math
import numpy as np
import pytest
from hypothesis import given, seed, settings, strategies as st
from clockforge import (HermitianMatrix, SymTridiagonal, ValidationError,
eig_hermitian, eig_tridiagonal, eigvals, spectral_gap, ground_state, kron,
principal_angles)

def test_hermitian_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        HermitianMatrix([[0, 1], [0, 0]])
    with pytest.raises(ValidationError):
        HermitianMatrix([[1, 2, 3]])
    with pytest.raises(ValidationError):
        HermitianMatrix([[np.inf]])

def test_hermitian_string():
    matrix = HermitianMatrix([
        [1, 1j],
        [-1j, 2]
    ])
    assert HermitianMatrix.from_string(matrix.to_string()) == matrix
    assert matrix.trace == pytest.approx(3.0)

def test_kron_layout():
    a = HermitianMatrix([
        [0, 1],
        [1, 0]
    ])
    b = HermitianMatrix.diagonal([1, 2])
    assert kron(a, b).allclose([
        [0, 0, 1, 0],
        [0, 0, 0, 2],
        [1, 0, 0, 0],
        [0, 2, 0, 0]
    ])

def test_projector():
    p = HermitianMatrix.projector([1, 1])
    assert p.is_projector()
    assert p.allclose([
        [0.5, 0.5],
        [0.5, 0.5]
    ])
    assert HermitianMatrix.projector(np.zeros((3, 0)), dim=3).trace == 0.0

def test_gauge_reduction():
    rng = np.random.default_rng(7)
    clock = SymTridiagonal.random(9, rng)
    dense = clock.to_hermitian()
    reduced = SymTridiagonal.from_hermitian(dense)
    assert reduced.is_stoquastic()
    assert np.allclose(eigvals(reduced), eigvals(dense))
    assert reduced.to_hermitian().allclose(dense, atol=1e-12)

def test_tridiagonal_rejects_shapes():
    with pytest.raises(ValidationError):
        SymTridiagonal([1, 2, 3], [1])
    with pytest.raises(ValidationError):
        SymTridiagonal([], [])
    with pytest.raises(ValidationError):
        SymTridiagonal([0, 0], [1], [1, 2])

def test_tridiagonal_string():
    clock = SymTridiagonal([0.5, 0, 0.5], [-0.5, -0.5], [1, 1j, -1])
    assert SymTridiagonal.from_string(clock.to_string()) == clock

def test_path_spectrum():
    # Eigenvalues 1 - cos(pi k / (T + 1)) of the free Kitaev clock with
    # reflecting ends, here on T + 1 = 8 states
    T = 7
    diag = np.ones(T + 1)
    diag[0] = diag[-1] = 0.5
    clock = SymTridiagonal(diag, -0.5 * np.ones(T))
    expected = [1.0 - math.cos(math.pi * k / (T + 1)) for k in range(T + 1)]
    values = eig_tridiagonal(clock).eigenvalues
    assert np.allclose(values, expected, atol=1e-12)
    assert spectral_gap(clock) == pytest.approx(expected[1])

def test_partial_tridiagonal():
    rng = np.random.default_rng(3)
    clock = SymTridiagonal.random(40, rng)
    full = eigvals(clock)
    lowest = eig_tridiagonal(clock, count=3)
    assert len(lowest) == 3
    assert np.allclose(lowest.eigenvalues, full[:3])
    with pytest.raises(ValidationError):
        eig_tridiagonal(clock, count=0)

def test_ground_state_phase():
    matrix = HermitianMatrix([
        [1, -1],
        [-1, 1]
    ])
    energy, vector = ground_state(matrix)
    assert energy == pytest.approx(0.0, abs=1e-12)
    assert np.allclose(vector, [1 / math.sqrt(2), 1 / math.sqrt(2)])
    assert ground_state(HermitianMatrix.identity(3)).degenerate

def test_gap_needs_two_states():
    with pytest.raises(ValidationError):
        spectral_gap(HermitianMatrix([[1.0]]))

def test_principal_angles():
    p = HermitianMatrix.basis_projector(2, 0)
    q = HermitianMatrix.projector([1, 1])
    cosines = principal_angles(p, q)
    assert np.allclose(cosines, [1 / math.sqrt(2)])
    assert len(principal_angles(p, HermitianMatrix.zeros(2))) == 0
    with pytest.raises(ValidationError):
        principal_angles(p, HermitianMatrix.diagonal([0.5, 0]))

@seed(20241018)
@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0,
max_value=3), st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_dense_residual(dim, bandwidth, entropy):
    matrix = HermitianMatrix.random_banded(dim, bandwidth,
    np.random.default_rng(entropy))
    decomposition = eig_hermitian(matrix)
    vectors = decomposition.eigenvectors
    assert np.all(np.diff(decomposition.eigenvalues) >= -1e-12)
    assert np.allclose(vectors.conj().T @ vectors, np.eye(dim), atol=1e-10)
    assert decomposition.residual <= 1e-10 * max(matrix.norm, 1e-300)
