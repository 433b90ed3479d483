from __future__ import annotations
from typing import Iterable
import math
import numpy as np
from ..config import get_tolerance
from ..errors import ValidationError

_SQRT_HALF = 1.0 / math.sqrt(2.0)

BUILTIN_GATES: dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": _SQRT_HALF * np.array([[1, 1], [1, -1]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "T": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex),
    "CNOT": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    dtype=complex),
}

def is_unitary(matrix: np.ndarray, tol: float | None = None) -> bool:
    """ Check U^dagger U = I within the tolerance """
    if tol is None:
        tol = get_tolerance("unitary")
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    defect = np.max(np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0])))
    return bool(defect <= tol)

class Gate:
    """ Unitary acting on an ordered list of target qubits. For multi-qubit
        gates the first target is the most significant tensor factor """

    def __init__(self, unitary: np.ndarray | Iterable[Iterable[complex]],
    targets: Iterable[int], *, name: str | None = None):
        self._unitary = np.array(unitary, dtype=complex)
        self._targets = tuple(int(target) for target in targets)
        self._name = name
        if len(self._targets) == 0:
            raise ValidationError("Gate needs at least one target qubit")
        if len(set(self._targets)) != len(self._targets):
            raise ValidationError(f"Gate targets {self._targets} are not "
            f"distinct")
        if min(self._targets) < 0:
            raise ValidationError(f"Negative target in {self._targets}")
        size = 2 ** len(self._targets)
        if self._unitary.shape != (size, size):
            raise ValidationError(f"Gate on {len(self._targets)} qubits needs "
            f"a {size}x{size} matrix, got shape {self._unitary.shape}")
        if not is_unitary(self._unitary):
            raise ValidationError(f"Gate {name or 'matrix'} is not unitary "
            f"within {get_tolerance('unitary'):.1e}")
        self._unitary.setflags(write=False)

    def __repr__(self) -> str:
        """ Canonical representation """
        if self._name is not None:
            return f"{self.__class__.__name__}.named({self._name!r}, " + (
            f"{list(self._targets)!r})")
        return (f"{self.__class__.__name__}({self._unitary.tolist()!r}, "
        f"{list(self._targets)!r})")

    @classmethod
    def named(cls, name: str, targets: Iterable[int]) -> Gate:
        """ One of the built-in gates I, X, Y, Z, H, S, T, CNOT """
        if name not in BUILTIN_GATES:
            raise ValidationError(f"Unknown gate '{name}', expected one of "
            f"{', '.join(BUILTIN_GATES)}")
        return cls(BUILTIN_GATES[name], targets, name=name)

    @property
    def unitary(self) -> np.ndarray:
        return self._unitary

    @property
    def targets(self) -> tuple[int, ...]:
        return self._targets

    @property
    def name(self) -> str | None:
        return self._name

    def embed(self, n: int) -> np.ndarray:
        """ Full 2^n x 2^n matrix of this gate on n qubits, with qubit 0 as the
            most significant tensor factor """
        if max(self._targets) >= n:
            raise ValidationError(f"Gate targets {self._targets} out of range "
            f"for {n} qubits")
        k = len(self._targets)
        dim = 2 ** n
        # Apply the gate to every column of the identity
        columns = np.eye(dim, dtype=complex).reshape((2,) * n + (dim,))
        tensor = self._unitary.reshape((2,) * (2 * k))
        result = np.tensordot(tensor, columns, axes=(list(range(k, 2 * k)),
        list(self._targets)))
        result = np.moveaxis(result, list(range(k)), list(self._targets))
        return result.reshape(dim, dim)
