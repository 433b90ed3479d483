from __future__ import annotations
from typing import Iterable, Any
import os
import json
import jsonschema
import numpy as np
from ..config import get_tolerance
from ..errors import ValidationError
from .hermitian import HermitianMatrix

JSON_SCHEMA = json.loads(open(os.path.join(os.path.dirname(__file__),
"tridiagonal_schema.json"), "r").read())

class SymTridiagonal:
    """ Real symmetric tridiagonal matrix, stored as its diagonal and first
        off-diagonal. When obtained from a complex tridiagonal Hermitian matrix
        the diagonal gauge phases are kept, so that the original operator is
        D T D^dagger with D = diag(phases) """

    def __init__(self, diag: Iterable[float], offdiag: Iterable[float], phases:
    Iterable[complex] | None = None):
        """ Constructor from T + 1 diagonal and T off-diagonal entries.
            Optionally unit-modulus gauge phases can be given """
        self._diag = np.array(list(diag), dtype=float)
        self._offdiag = np.array(list(offdiag), dtype=float)
        if len(self._diag) < 1:
            raise ValidationError("Tridiagonal matrix needs dimension at least "
            "1")
        if len(self._offdiag) != len(self._diag) - 1:
            raise ValidationError(f"Off-diagonal has length {len(self._offdiag)}"
            f", expected {len(self._diag) - 1}")
        if not (np.all(np.isfinite(self._diag)) and np.all(np.isfinite(
        self._offdiag))):
            raise ValidationError("Tridiagonal matrix has non-finite entries")
        if phases is None:
            self._phases = None
        else:
            self._phases = np.array(list(phases), dtype=complex)
            if len(self._phases) != len(self._diag):
                raise ValidationError(f"Expected {len(self._diag)} phases, got "
                f"{len(self._phases)}")
            if np.max(np.abs(np.abs(self._phases) - 1.0)) > 1e-12:
                raise ValidationError("Gauge phases need unit modulus")
            self._phases.setflags(write=False)
        self._diag.setflags(write=False)
        self._offdiag.setflags(write=False)

    def __len__(self) -> int:
        return len(self._diag)

    def __repr__(self) -> str:
        """ Canonical representation """
        phases = None if self._phases is None else self._phases.tolist()
        return (f"{self.__class__.__name__}({self._diag.tolist()!r}, "
        f"{self._offdiag.tolist()!r}, phases={phases!r})")

    def __str__(self) -> str:
        return self.to_string()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SymTridiagonal):
            return False
        same_phases = (self._phases is None and other._phases is None) or (
        self._phases is not None and other._phases is not None and
        np.array_equal(self._phases, other._phases))
        return (np.array_equal(self._diag, other._diag) and np.array_equal(
        self._offdiag, other._offdiag) and same_phases)

    @classmethod
    def from_hermitian(cls, matrix: HermitianMatrix, tol: float | None = None
    ) -> SymTridiagonal:
        """ Gauge reduction of a tridiagonal Hermitian matrix. Phases are chosen
            recursively as phi_{t+1} = phi_t + arg(b_t) - pi, which makes every
            off-diagonal entry real and non-positive """
        if tol is None:
            tol = get_tolerance("hermitian")
        entries = matrix.entries
        scale = max(1.0, float(np.max(np.abs(entries))))
        if not matrix.is_tridiagonal(tol * scale):
            raise ValidationError("Matrix is not tridiagonal")
        diag = entries.diagonal().real
        lower = entries.diagonal(-1)
        angles = np.zeros(matrix.dim)
        angles[1:] = np.cumsum(np.angle(lower) - np.pi)
        phases = np.exp(1j * angles)
        return cls(diag, -np.abs(lower), phases)

    @classmethod
    def random(cls, T: int, rng: np.random.Generator, *, min_coupling: float =
    0.05) -> SymTridiagonal:
        """ Random complex tridiagonal Hamiltonian with diagonal weights in
            [0, 1], coupling magnitudes in [min_coupling, 1] and uniformly
            random coupling phases """
        if T < 1:
            raise ValidationError(f"Random tridiagonal needs T >= 1, got T={T}")
        if not 0.0 < min_coupling <= 1.0:
            raise ValidationError(f"Minimum coupling has to lie in (0, 1], got "
            f"{min_coupling}")
        diag = rng.uniform(0.0, 1.0, T + 1)
        magnitudes = rng.uniform(min_coupling, 1.0, T)
        angles = np.zeros(T + 1)
        angles[1:] = np.cumsum(rng.uniform(-np.pi, np.pi, T))
        return cls(diag, -magnitudes, np.exp(1j * angles))

    @classmethod
    def from_string(cls, text: str) -> SymTridiagonal:
        """ Convert JSON to a SymTridiagonal object """
        data = json.loads(text)
        jsonschema.validate(data, JSON_SCHEMA)
        phases = None
        if "phases" in data:
            phases = [complex(re, im) for re, im in data["phases"]]
        return cls(data["diag"], data["offdiag"], phases)

    def to_string(self) -> str:
        """ Convert this matrix to JSON """
        data: dict[str, Any] = {
            "diag": self._diag.tolist(),
            "offdiag": self._offdiag.tolist(),
        }
        if self._phases is not None:
            data["phases"] = [[float(z.real), float(z.imag)] for z in
            self._phases]
        return json.dumps(data)

    @property
    def dim(self) -> int:
        return len(self._diag)

    @property
    def T(self) -> int:
        """ Number of clock steps, i.e. dimension minus one """
        return len(self._diag) - 1

    @property
    def diag(self) -> np.ndarray:
        return self._diag

    @property
    def offdiag(self) -> np.ndarray:
        return self._offdiag

    @property
    def phases(self) -> np.ndarray | None:
        return self._phases

    @property
    def gershgorin_norm(self) -> float:
        """ Upper bound on the spectral norm from Gershgorin discs """
        radius = np.abs(self._diag).copy()
        radius[:-1] += np.abs(self._offdiag)
        radius[1:] += np.abs(self._offdiag)
        return float(np.max(radius))

    def gauged(self) -> SymTridiagonal:
        """ The same matrix without gauge phases """
        return SymTridiagonal(self._diag, self._offdiag)

    def real_matrix(self) -> np.ndarray:
        """ Dense real matrix in the gauged basis """
        return (np.diag(self._diag) + np.diag(self._offdiag, 1) + np.diag(
        self._offdiag, -1))

    def to_hermitian(self) -> HermitianMatrix:
        """ Dense form of the operator in the original basis, i.e. with gauge
            phases applied """
        dense = self.real_matrix().astype(complex)
        if self._phases is not None:
            dense = self._phases[:, None] * dense * self._phases.conj()[None, :]
        return HermitianMatrix(dense)

    def to_original(self, vectors: np.ndarray) -> np.ndarray:
        """ Map vectors from the gauged basis back to the original basis """
        if self._phases is None:
            return np.asarray(vectors, dtype=complex)
        vectors = np.asarray(vectors, dtype=complex)
        if vectors.ndim == 1:
            return self._phases * vectors
        return self._phases[:, None] * vectors

    def matvec(self, vectors: np.ndarray) -> np.ndarray:
        """ Product of the gauged real matrix with one or more column vectors
            in O(T) per vector """
        vectors = np.asarray(vectors)
        single = vectors.ndim == 1
        if single:
            vectors = vectors[:, None]
        result = self._diag[:, None] * vectors
        result[:-1] += self._offdiag[:, None] * vectors[1:]
        result[1:] += self._offdiag[:, None] * vectors[:-1]
        return result[:, 0] if single else result

    def shifted(self, shift: float, scale: float = 1.0) -> SymTridiagonal:
        """ Returns (M - shift) / scale, keeping the gauge phases """
        return SymTridiagonal((self._diag - shift) / scale, self._offdiag /
        scale, self._phases)

    def is_stoquastic(self, tol: float | None = None) -> bool:
        if tol is None:
            tol = get_tolerance("stoquastic")
        return bool(np.all(self._offdiag <= tol))
