from __future__ import annotations
from typing import Iterable, Any
from numbers import Real
import os
import json
import jsonschema
import numpy as np
import scipy.linalg
from ..config import get_tolerance, get_cap
from ..errors import ValidationError

JSON_SCHEMA = json.loads(open(os.path.join(os.path.dirname(__file__),
"hermitian_schema.json"), "r").read())

def as_array(matrix: HermitianMatrix | np.ndarray | Iterable[Iterable[Any]]) -> (
np.ndarray):
    """ Get the entries of a matrix-like object as a complex numpy array """
    if isinstance(matrix, HermitianMatrix):
        return matrix.entries
    return np.asarray(matrix, dtype=complex)

class HermitianMatrix:
    """ Dense complex Hermitian operator. Entries are symmetrized on
        construction and cannot be changed afterwards """

    def __init__(self, entries: np.ndarray | Iterable[Iterable[Any]], *, atol:
    float | None = None):
        """ Constructor from a square array. The Hermiticity defect may be at
            most atol times max(1, largest entry), otherwise the matrix is
            rejected """
        array = np.array(entries, dtype=complex)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValidationError(f"Hermitian matrix has to be square, got "
            f"shape {array.shape}")
        if array.shape[0] < 1:
            raise ValidationError("Hermitian matrix needs dimension at least 1")
        if not np.all(np.isfinite(array)):
            raise ValidationError("Hermitian matrix has non-finite entries")
        if atol is None:
            atol = get_tolerance("hermitian")
        scale = max(1.0, float(np.max(np.abs(array))))
        defect = float(np.max(np.abs(array - array.conj().T)))
        if defect > atol * scale:
            raise ValidationError(f"Matrix is not Hermitian: defect {defect:.3e}"
            f" exceeds {atol * scale:.3e}")
        array = (array + array.conj().T) / 2
        array.setflags(write=False)
        self._entries = array
        self._norm: float | None = None

    def __repr__(self) -> str:
        """ Canonical representation """
        return f"{self.__class__.__name__}({self._entries.tolist()!r})"

    def __str__(self) -> str:
        """ Convert this matrix to JSON """
        return self.to_string()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, HermitianMatrix):
            return False
        return self.dim == other.dim and bool(np.array_equal(self._entries,
        other._entries))

    def __hash__(self) -> int:
        return hash(self._entries.tobytes())

    def __getitem__(self, key: tuple[int, int]) -> complex:
        """ Get an entry from the matrix given by (row, column) """
        return complex(self._entries[key])

    def __add__(self, other: HermitianMatrix) -> HermitianMatrix:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        self._check_same_dim(other)
        return HermitianMatrix(self._entries + other._entries)

    def __sub__(self, other: HermitianMatrix) -> HermitianMatrix:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        self._check_same_dim(other)
        return HermitianMatrix(self._entries - other._entries)

    def __neg__(self) -> HermitianMatrix:
        return HermitianMatrix(-self._entries)

    def __mul__(self, factor: Real) -> HermitianMatrix:
        """ Multiplication with a real scalar """
        if not isinstance(factor, Real):
            return NotImplemented
        return HermitianMatrix(float(factor) * self._entries)

    def __rmul__(self, factor: Real) -> HermitianMatrix:
        return self.__mul__(factor)

    def __matmul__(self, other: HermitianMatrix | np.ndarray) -> np.ndarray:
        """ Plain matrix product. The result is in general not Hermitian and is
            therefore returned as an array """
        return self._entries @ as_array(other)

    def __rmatmul__(self, other: np.ndarray) -> np.ndarray:
        return as_array(other) @ self._entries

    def __pow__(self, other: HermitianMatrix) -> HermitianMatrix:
        """ Kronecker product """
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        dim = self.dim * other.dim
        if dim > get_cap("max_dense_dim"):
            raise ValidationError(f"Kronecker product dimension {dim} exceeds "
            f"the cap of {get_cap('max_dense_dim')}")
        return HermitianMatrix(np.kron(self._entries, other._entries))

    def _check_same_dim(self, other: HermitianMatrix):
        if self.dim != other.dim:
            raise ValidationError(f"Dimension mismatch: {self.dim} and "
            f"{other.dim}")

    @classmethod
    def identity(cls, dim: int) -> HermitianMatrix:
        return cls(np.eye(dim))

    @classmethod
    def zeros(cls, dim: int) -> HermitianMatrix:
        return cls(np.zeros((dim, dim)))

    @classmethod
    def diagonal(cls, values: Iterable[float]) -> HermitianMatrix:
        """ Diagonal matrix with the given real values """
        values = np.asarray(list(values), dtype=float)
        return cls(np.diag(values))

    @classmethod
    def projector(cls, vectors: np.ndarray | Iterable[Iterable[complex]],
    dim: int | None = None) -> HermitianMatrix:
        """ Orthogonal projector onto the span of the given column vectors. A
            one-dimensional input is treated as a single vector """
        array = np.asarray(vectors, dtype=complex)
        if array.ndim == 1:
            array = array[:, None]
        if array.size == 0:
            if dim is None:
                raise ValidationError("Projector onto the empty set needs an "
                "explicit dimension")
            return cls.zeros(dim)
        basis = scipy.linalg.orth(array)
        return cls(basis @ basis.conj().T)

    @classmethod
    def random_banded(cls, dim: int, bandwidth: int, rng: np.random.Generator
    ) -> HermitianMatrix:
        """ Random Hermitian matrix with complex Gaussian entries within the
            given distance of the diagonal and zeros elsewhere """
        if dim < 1 or bandwidth < 0:
            raise ValidationError(f"Invalid banded shape dim={dim}, "
            f"bandwidth={bandwidth}")
        values = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        distance = np.abs(np.subtract.outer(np.arange(dim), np.arange(dim)))
        values[distance > bandwidth] = 0.0
        return cls((values + values.conj().T) / 2)

    @classmethod
    def basis_projector(cls, dim: int, index: int) -> HermitianMatrix:
        """ Projector |index><index| on a space of the given dimension """
        if not 0 <= index < dim:
            raise ValidationError(f"Basis index {index} out of range for "
            f"dimension {dim}")
        values = np.zeros(dim)
        values[index] = 1.0
        return cls.diagonal(values)

    @classmethod
    def from_string(cls, text: str) -> HermitianMatrix:
        """ Convert JSON to a HermitianMatrix object """
        data = json.loads(text)
        jsonschema.validate(data, JSON_SCHEMA)
        dim = data["dim"]
        if len(data["entries"]) != dim * dim:
            raise ValidationError(f"Expected {dim * dim} entries, got "
            f"{len(data['entries'])}")
        values = np.array([complex(re, im) for re, im in data["entries"]])
        return cls(values.reshape(dim, dim))

    def to_string(self) -> str:
        """ Convert this matrix to JSON, with entries in row-major order """
        return json.dumps({
            "dim": self.dim,
            "entries": [[float(z.real), float(z.imag)] for z in
            self._entries.ravel()],
        })

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """ Read-only view of the entries """
        return self._entries

    @property
    def norm(self) -> float:
        """ Spectral norm """
        if self._norm is None:
            values = scipy.linalg.eigvalsh(self._entries)
            self._norm = float(max(abs(values[0]), abs(values[-1])))
        return self._norm

    @property
    def trace(self) -> float:
        return float(np.trace(self._entries).real)

    def is_stoquastic(self, tol: float | None = None) -> bool:
        """ Check whether all off-diagonal entries are real and non-positive
            within the tolerance """
        if tol is None:
            tol = get_tolerance("stoquastic")
        off = self._entries - np.diag(np.diag(self._entries))
        return bool(np.all(np.abs(off.imag) <= tol) and np.all(off.real <= tol))

    def is_projector(self, tol: float | None = None) -> bool:
        """ Check idempotence within the tolerance """
        if tol is None:
            tol = get_tolerance("idempotent")
        defect = np.max(np.abs(self._entries @ self._entries - self._entries))
        return bool(defect <= tol)

    def is_tridiagonal(self, tol: float = 0.0) -> bool:
        """ Check that all entries outside the first off-diagonals vanish """
        band = np.triu(np.tril(np.ones((self.dim, self.dim)), 1), -1)
        return bool(np.all(np.abs(self._entries[band == 0]) <= tol))

    def conjugate_by(self, unitary: np.ndarray) -> HermitianMatrix:
        """ Returns W^dagger H W for the given matrix W """
        unitary = np.asarray(unitary, dtype=complex)
        return HermitianMatrix(unitary.conj().T @ self._entries @ unitary)

    def expectation(self, vector: np.ndarray) -> float:
        """ Returns <v|H|v> for a (not necessarily normalized) vector """
        vector = np.asarray(vector, dtype=complex)
        return float(np.vdot(vector, self._entries @ vector).real)

    def allclose(self, other: HermitianMatrix | np.ndarray, atol: float = 1e-12
    ) -> bool:
        """ Entrywise comparison with absolute tolerance """
        other = as_array(other)
        return other.shape == self._entries.shape and bool(np.max(np.abs(
        self._entries - other)) <= atol)
