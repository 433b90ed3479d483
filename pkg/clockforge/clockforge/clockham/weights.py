from __future__ import annotations
from typing import Iterable
import numpy as np
from ..errors import ValidationError
from ..spectral import HermitianMatrix, SymTridiagonal

class ClockWeights:
    """ Coefficients of a clock Hamiltonian sum_t a_t |t><t| + sum_t (b_t
        |t+1><t| + h.c.) on the clock register with T + 1 states. All weights
        are bounded in magnitude by the bound, which is 1 in the normalized
        setting """

    def __init__(self, T: int, a: Iterable[float], b: Iterable[complex], *,
    bound: float = 1.0):
        """ Constructor with the number of gates T, T + 1 diagonal weights and
            T transition weights """
        if T < 1:
            raise ValidationError(f"Clock needs at least one step, got T={T}")
        self._T = T
        self._a = np.array(list(a), dtype=float)
        self._b = np.array(list(b), dtype=complex)
        self._bound = float(bound)
        if len(self._a) != T + 1:
            raise ValidationError(f"Expected {T + 1} diagonal weights, got "
            f"{len(self._a)}")
        if len(self._b) != T:
            raise ValidationError(f"Expected {T} transition weights, got "
            f"{len(self._b)}")
        slack = 1e-12 * max(1.0, self._bound)
        if np.max(np.abs(self._a)) > self._bound + slack:
            raise ValidationError(f"Diagonal weight of magnitude "
            f"{np.max(np.abs(self._a)):.6g} exceeds the bound {self._bound}")
        if np.max(np.abs(self._b)) > self._bound + slack:
            raise ValidationError(f"Transition weight of magnitude "
            f"{np.max(np.abs(self._b)):.6g} exceeds the bound {self._bound}")
        self._a.setflags(write=False)
        self._b.setflags(write=False)

    def __repr__(self) -> str:
        """ Canonical representation """
        return (f"{self.__class__.__name__}({self._T!r}, {self._a.tolist()!r}, "
        f"{self._b.tolist()!r}, bound={self._bound!r})")

    @classmethod
    def kitaev(cls, T: int) -> ClockWeights:
        """ Weights of the unweighted clock, i.e. the Laplacian of the path graph
            with a_0 = a_T = 1, interior a_t = 2 and b_t = -1. The interior
            weights exceed the unit normalization, hence bound 2 """
        a = np.full(T + 1, 2.0)
        a[0] = a[-1] = 1.0
        return cls(T, a, -np.ones(T), bound=2.0)

    @classmethod
    def from_tridiagonal(cls, matrix: SymTridiagonal | HermitianMatrix, *,
    bound: float | None = None) -> ClockWeights:
        """ Read the weights off a tridiagonal matrix. For gauged matrices the
            original complex transition weights are restored """
        if isinstance(matrix, SymTridiagonal):
            dense = matrix.to_hermitian().entries
        else:
            if not matrix.is_tridiagonal(1e-12):
                raise ValidationError("Matrix is not tridiagonal")
            dense = matrix.entries
        a = dense.diagonal().real
        b = dense.diagonal(-1)
        if bound is None:
            bound = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b),
            initial=0.0)))
        return cls(len(a) - 1, a, b, bound=bound)

    @property
    def T(self) -> int:
        return self._T

    @property
    def a(self) -> np.ndarray:
        return self._a

    @property
    def b(self) -> np.ndarray:
        return self._b

    @property
    def bound(self) -> float:
        return self._bound

def clock_hamiltonian(weights: ClockWeights) -> HermitianMatrix:
    """ Dense (T + 1) x (T + 1) clock Hamiltonian with diagonal a, b_t at
        position (t + 1, t) and its conjugate at (t, t + 1) """
    dense = np.diag(weights.a).astype(complex)
    dense += np.diag(weights.b, -1)
    dense += np.diag(weights.b.conj(), 1)
    return HermitianMatrix(dense)

def clock_tridiagonal(weights: ClockWeights) -> SymTridiagonal:
    """ Gauge-reduced tridiagonal form of the clock Hamiltonian for the O(T)
        solver path. Same phase convention as SymTridiagonal.from_hermitian,
        without forming the dense matrix """
    angles = np.zeros(weights.T + 1)
    angles[1:] = np.cumsum(np.angle(weights.b) - np.pi)
    return SymTridiagonal(weights.a, -np.abs(weights.b), np.exp(1j * angles))
