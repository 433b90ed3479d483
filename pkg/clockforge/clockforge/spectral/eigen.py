from __future__ import annotations
from dataclasses import dataclass
from typing import Iterator
import numpy as np
import scipy.linalg
from ..config import get_tolerance, get_cap
from ..errors import ValidationError, NumericalError
from .hermitian import HermitianMatrix, as_array
from .tridiagonal import SymTridiagonal

SpectralMatrix = HermitianMatrix | SymTridiagonal

@dataclass(frozen=True)
class EigenDecomposition:
    """ Eigenvalues in ascending order with orthonormal eigenvector columns and
        the largest residual norm |Hv - lambda v| that was observed """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {
            "Dimension": str(self.eigenvectors.shape[0]),
            "Eigenpairs": str(len(self.eigenvalues)),
            "Lowest": f"{self.eigenvalues[0]:.12g}",
            "Residual": f"{self.residual:.3e}",
        }
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

    def __len__(self) -> int:
        return len(self.eigenvalues)

@dataclass(frozen=True)
class GroundState:
    """ Lowest eigenpair of a Hermitian operator. The vector is normalized with
        its largest-magnitude amplitude real and positive """

    energy: float
    vector: np.ndarray
    degenerate: bool = False

    def __iter__(self) -> Iterator[float | np.ndarray]:
        """ Allows unpacking as (energy, vector) """
        yield self.energy
        yield self.vector

def fix_phase(vector: np.ndarray) -> np.ndarray:
    """ Multiply a vector by a global phase such that its largest-magnitude
        amplitude is real and positive """
    vector = np.asarray(vector, dtype=complex)
    index = int(np.argmax(np.abs(vector)))
    if abs(vector[index]) == 0.0:
        return vector
    return vector * (abs(vector[index]) / vector[index])

def _check_tol(tol: float | None) -> float:
    if tol is None:
        tol = get_tolerance("tol")
    if not tol > 0.0:
        raise ValidationError(f"Tolerance has to be positive, got {tol}")
    return tol

def _check_orthonormal(vectors: np.ndarray, residual: float):
    gram = vectors.conj().T @ vectors
    defect = float(np.max(np.abs(gram - np.eye(gram.shape[0])))) if len(gram
    ) > 0 else 0.0
    if defect > 1e-10:
        raise NumericalError(f"Eigenvectors are not orthonormal, defect "
        f"{defect:.3e}", residual)

def eig_hermitian(matrix: HermitianMatrix | np.ndarray, tol: float | None =
None) -> EigenDecomposition:
    """ Full spectrum and eigenbasis of a dense Hermitian matrix. The matrix is
        reduced to tridiagonal form by Householder reflections and diagonalized
        by implicitly shifted QR iterations. Every eigenpair satisfies
        |Hv - lambda v| <= tol * |H| """
    tol = _check_tol(tol)
    if not isinstance(matrix, HermitianMatrix):
        matrix = HermitianMatrix(matrix)
    if matrix.dim > get_cap("max_dense_dim"):
        raise ValidationError(f"Dimension {matrix.dim} exceeds the dense cap "
        f"of {get_cap('max_dense_dim')}")
    entries = matrix.entries
    try:
        values, vectors = scipy.linalg.eigh(entries, driver="ev")
    except (scipy.linalg.LinAlgError, ValueError) as error:
        raise NumericalError(f"Dense eigensolver did not converge for "
        f"dimension {matrix.dim}: {error}") from error
    residual = float(np.max(np.linalg.norm(entries @ vectors - vectors * values,
    axis=0)))
    norm = float(max(abs(values[0]), abs(values[-1])))
    if residual > tol * max(norm, np.finfo(float).tiny):
        raise NumericalError(f"Dense eigensolver residual exceeds "
        f"{tol:.1e} * |H| = {tol * norm:.3e}", residual)
    _check_orthonormal(vectors, residual)
    return EigenDecomposition(values, vectors, residual)

def eig_tridiagonal(matrix: SymTridiagonal, tol: float | None = None, count:
int | None = None) -> EigenDecomposition:
    """ Eigenpairs of a real symmetric tridiagonal matrix by Sturm sequence
        bisection and inverse iteration, using O(T) memory per vector. If count
        is given, only the lowest count eigenpairs are computed. Eigenvectors
        are returned in the original (ungauged) basis """
    tol = _check_tol(tol)
    dim = matrix.dim
    if count is not None and not 1 <= count <= dim:
        raise ValidationError(f"Cannot compute {count} eigenpairs of a matrix "
        f"with dimension {dim}")
    if dim == 1:
        values = matrix.diag.copy()
        vectors = np.ones((1, 1))
    else:
        select, select_range = "a", None
        if count is not None and count < dim:
            select, select_range = "i", (0, count - 1)
        try:
            values, vectors = scipy.linalg.eigh_tridiagonal(matrix.diag,
            matrix.offdiag, select=select, select_range=select_range,
            lapack_driver="stebz")
        except (scipy.linalg.LinAlgError, ValueError) as error:
            raise NumericalError(f"Tridiagonal eigensolver failed for dimension "
            f"{dim}: {error}") from error
    residual = float(np.max(np.linalg.norm(matrix.matvec(vectors) - vectors *
    values, axis=0)))
    if count is None or count == dim:
        norm = float(max(abs(values[0]), abs(values[-1])))
    else:
        norm = matrix.gershgorin_norm
    if residual > tol * max(norm, np.finfo(float).tiny):
        raise NumericalError(f"Tridiagonal eigensolver residual exceeds "
        f"{tol:.1e} * |M| = {tol * norm:.3e}", residual)
    _check_orthonormal(vectors, residual)
    return EigenDecomposition(values, matrix.to_original(vectors), residual)

def eigvals(matrix: SpectralMatrix, count: int | None = None) -> np.ndarray:
    """ Ascending eigenvalues of either matrix type, optionally only the lowest
        count ones """
    if isinstance(matrix, SymTridiagonal):
        if matrix.dim == 1:
            return matrix.diag.copy()
        if count is None or count >= matrix.dim:
            return scipy.linalg.eigvalsh_tridiagonal(matrix.diag,
            matrix.offdiag, lapack_driver="stebz")
        return scipy.linalg.eigvalsh_tridiagonal(matrix.diag, matrix.offdiag,
        select="i", select_range=(0, count - 1), lapack_driver="stebz")
    entries = as_array(matrix)
    if count is None or count >= entries.shape[0]:
        return scipy.linalg.eigvalsh(entries)
    return scipy.linalg.eigvalsh(entries, subset_by_index=(0, count - 1))

def spectral_gap(matrix: SpectralMatrix | np.ndarray) -> float:
    """ Difference E_1 - E_0 between the two lowest eigenvalues """
    if not isinstance(matrix, (HermitianMatrix, SymTridiagonal)):
        matrix = HermitianMatrix(matrix)
    if matrix.dim < 2:
        raise ValidationError("Spectral gap is undefined for dimension 1")
    values = eigvals(matrix, 2)
    return float(values[1] - values[0])

def operator_norm(matrix: SpectralMatrix) -> float:
    """ Spectral norm, or the Gershgorin bound for tridiagonal matrices """
    if isinstance(matrix, SymTridiagonal):
        return matrix.gershgorin_norm
    return matrix.norm

def ground_state(matrix: SpectralMatrix | np.ndarray, tol: float | None = None
) -> GroundState:
    """ Lowest eigenpair with the global phase fixed such that the largest
        amplitude is real and positive. Degeneracy within 1e-9 * max(1, |H|) is
        flagged, and one representative of the ground space is returned """
    if not isinstance(matrix, (HermitianMatrix, SymTridiagonal)):
        matrix = HermitianMatrix(matrix)
    count = min(2, matrix.dim)
    if isinstance(matrix, SymTridiagonal):
        decomposition = eig_tridiagonal(matrix, tol, count)
    else:
        decomposition = eig_hermitian(matrix, tol)
    values = decomposition.eigenvalues
    degenerate = False
    if matrix.dim > 1:
        threshold = get_tolerance("degeneracy") * max(1.0, operator_norm(matrix))
        degenerate = bool(values[1] - values[0] <= threshold)
    vector = fix_phase(decomposition.eigenvectors[:, 0])
    return GroundState(float(values[0]), vector, degenerate)

def kron(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """ Kronecker product with row-major block layout, rejected when the
        result exceeds the dense dimension cap """
    return a ** b

def principal_angles(p: HermitianMatrix | np.ndarray, q: HermitianMatrix |
np.ndarray, tol: float | None = None) -> np.ndarray:
    """ Cosines of the principal angles between the ranges of two orthogonal
        projectors, in descending order. The number of angles is the smaller of
        the two ranks; an empty range gives an empty result """
    if tol is None:
        tol = get_tolerance("idempotent")
    if not isinstance(p, HermitianMatrix):
        p = HermitianMatrix(p)
    if not isinstance(q, HermitianMatrix):
        q = HermitianMatrix(q)
    if p.dim != q.dim:
        raise ValidationError(f"Projectors act on different dimensions {p.dim} "
        f"and {q.dim}")
    for name, projector in (("P", p), ("Q", q)):
        if not projector.is_projector(tol):
            raise ValidationError(f"{name} is not idempotent within {tol:.1e}")
    basis_p = range_basis(p)
    basis_q = range_basis(q)
    if basis_p.shape[1] == 0 or basis_q.shape[1] == 0:
        return np.zeros(0)
    cosines = scipy.linalg.svdvals(basis_p.conj().T @ basis_q)
    return np.clip(np.sort(cosines)[::-1], 0.0, 1.0)

def range_basis(projector: HermitianMatrix, threshold: float = 0.5) -> (
np.ndarray):
    """ Orthonormal basis of the range of an orthogonal projector, from the
        eigenvectors with eigenvalue above the threshold """
    values, vectors = scipy.linalg.eigh(projector.entries)
    return vectors[:, values > threshold]

def kernel_basis(matrix: HermitianMatrix, threshold: float | None = None) -> (
np.ndarray):
    """ Orthonormal basis of the eigenvectors with eigenvalue magnitude at most
        the threshold """
    if threshold is None:
        threshold = get_tolerance("kernel")
    values, vectors = scipy.linalg.eigh(matrix.entries)
    return vectors[:, np.abs(values) <= threshold]
