from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable
import numpy as np
import scipy.linalg
from ..errors import ValidationError, NumericalError
from ..spectral import HermitianMatrix, SymTridiagonal, SpectralMatrix
from ..circuitham import is_unitary
from .graph import UnitaryLabeledGraph, ulg_hamiltonian

@dataclass(frozen=True)
class FrustratedPair:
    """ Two vertices joined by edges labeled I and U. In the eigenbasis of I + U
        the coupling between the vertices is diagonal with entries lambda_i,
        and the i-th channel behaves like an edge of strength |lambda_i| plus a
        penalty 2 - |lambda_i| on both vertices """

    hamiltonian: HermitianMatrix
    transformed: HermitianMatrix
    eigenvalues: np.ndarray
    penalties: np.ndarray

def frustrated_pair_analysis(unitary: np.ndarray) -> FrustratedPair:
    """ Transform the double-edge Hamiltonian by the Schur basis of I + U,
        with channels ordered by decreasing |lambda_i| """
    unitary = np.asarray(unitary, dtype=complex)
    if unitary.ndim != 2 or not is_unitary(unitary):
        raise ValidationError("Label of the double edge is not unitary")
    d = unitary.shape[0]
    hamiltonian = ulg_hamiltonian(UnitaryLabeledGraph.double_edge(unitary))
    triangular, basis = scipy.linalg.schur(np.eye(d) + unitary, output="complex")
    eigenvalues = np.diag(triangular).copy()
    order = np.argsort(-np.abs(eigenvalues), kind="stable")
    eigenvalues = eigenvalues[order]
    basis = basis[:, order]
    magnitudes = np.abs(eigenvalues)
    if np.max(magnitudes) > 2.0 + 1e-10:
        raise NumericalError("Eigenvalue of I + U exceeds 2 in magnitude",
        float(np.max(magnitudes) - 2.0))
    transformed = hamiltonian.conjugate_by(np.kron(np.eye(2), basis))
    penalties = np.clip(2.0 - magnitudes, 0.0, 2.0)
    return FrustratedPair(hamiltonian, transformed, eigenvalues, penalties)

@dataclass(frozen=True)
class LowEnergyCertificate:
    """ State in the span of all eigenvectors with energy at most R that
        vanishes on the penalized vertices. Its energy bounds the ground
        energy of the Hamiltonian plus any penalty supported there """

    energy: float
    state: np.ndarray
    subspace_dim: int

def low_energy_unsat_upper_bound(matrix: SpectralMatrix, penalty_vertices:
Iterable[int], R: float, local_dim: int = 1) -> LowEnergyCertificate:
    """ Find the lowest-energy state in the eigenspace below R with zero
        amplitude on every basis state of the penalized vertices. Needs more low
        energy states than penalized basis states """
    if isinstance(matrix, SymTridiagonal):
        matrix = matrix.to_hermitian()
    if local_dim < 1 or matrix.dim % local_dim != 0:
        raise ValidationError(f"Local dimension {local_dim} does not divide "
        f"{matrix.dim}")
    vertices = sorted(set(int(v) for v in penalty_vertices))
    n_vertices = matrix.dim // local_dim
    if any(not 0 <= v < n_vertices for v in vertices):
        raise ValidationError(f"Penalty vertices {vertices} out of range for "
        f"{n_vertices} vertices")
    energies, vectors = scipy.linalg.eigh(matrix.entries)
    low = energies <= R + 1e-12 * max(1.0, abs(R))
    k = int(np.count_nonzero(low))
    rows = [v * local_dim + i for v in vertices for i in range(local_dim)]
    if k < len(rows) + 1:
        raise ValidationError(f"Only {k} eigenvalues are at most R={R}, need "
        f"at least {len(rows) + 1} for {len(vertices)} penalized vertices")
    energies, vectors = energies[low], vectors[:, low]
    if len(rows) == 0:
        kernel = np.eye(k)
    else:
        kernel = scipy.linalg.null_space(vectors[rows, :])
    reduced = kernel.conj().T @ np.diag(energies) @ kernel
    values, coefficients = scipy.linalg.eigh(reduced)
    state = vectors @ (kernel @ coefficients[:, 0])
    state = state / np.linalg.norm(state)
    return LowEnergyCertificate(matrix.expectation(state), state, k)
