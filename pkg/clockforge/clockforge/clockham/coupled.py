from __future__ import annotations
from dataclasses import dataclass
import math
import numpy as np
import sympy
from ..errors import ValidationError
from ..spectral import HermitianMatrix, SymTridiagonal

CASES = ("first", "bulk", "left_junction", "right_junction", "far_end")

@dataclass(frozen=True)
class CoupledBlockParams:
    """ Parameters of one coupled two-clock block: clock length T, and the
        weight mu and ratio eta of the rank one output penalty block """

    T: int
    mu: float
    eta: float

    def __post_init__(self):
        if self.T < 1:
            raise ValidationError(f"Coupled block needs T >= 1, got T={self.T}")
        if not 0.0 <= self.mu <= 1.0:
            raise ValidationError(f"mu has to lie in [0, 1], got {self.mu}")
        if not self.eta >= 0.0:
            raise ValidationError(f"eta has to be non-negative, got {self.eta}")

    def admissible(self, eps: float) -> bool:
        """ Check the regime mu >= 1 - eps, eta <= sqrt(eps / (1 - eps)) of a
            circuit with acceptance probability eps """
        if eps >= 1.0:
            return self.mu >= 0.0
        return self.mu >= 1.0 - eps - 1e-12 and self.eta <= math.sqrt(eps / (
        1.0 - eps)) + 1e-12

def _path_laplacian(size: int) -> np.ndarray:
    laplacian = 2.0 * np.eye(size) - np.eye(size, k=1) - np.eye(size, k=-1)
    laplacian[0, 0] = laplacian[-1, -1] = 1.0
    if size == 1:
        laplacian[0, 0] = 0.0
    return laplacian

def _reversed_second_half(T: int) -> list[int]:
    """ Basis order (0, 0),..,(0, T), (1, T),..,(1, 0) as indices into the
        tensor product order """
    size = T + 1
    return list(range(size)) + [size + (T - k) for k in range(size)]

def coupled_block(params: CoupledBlockParams) -> HermitianMatrix:
    """ The 2(T+1) dimensional block (I_2 x Delta) + |0><0| x |0><0| + L x |T><T|
        with L = mu (|1><1| + eta^2 |0><0| - eta (|0><1| + |1><0|)), in the
        basis with the second half of the clock reversed """
    size = params.T + 1
    mu, eta = params.mu, params.eta
    first = np.zeros((size, size))
    first[0, 0] = 1.0
    last = np.zeros((size, size))
    last[-1, -1] = 1.0
    coupling = mu * np.array([[eta * eta, -eta], [-eta, 1.0]])
    block = (np.kron(np.eye(2), _path_laplacian(size)) + np.kron(np.diag(
    [1.0, 0.0]), first) + np.kron(coupling, last))
    order = _reversed_second_half(params.T)
    return HermitianMatrix(block[np.ix_(order, order)])

def coupled_block_tridiagonal(params: CoupledBlockParams) -> SymTridiagonal:
    """ The coupled block is tridiagonal in the reversed basis: two path
        Laplacians joined by -mu eta at the middle """
    size = params.T + 1
    mu, eta = params.mu, params.eta
    laplacian = _path_laplacian(size).diagonal()
    diag = np.concatenate([laplacian, laplacian[::-1]])
    diag[0] += 1.0
    diag[size - 1] += mu * eta * eta
    diag[size] += mu
    offdiag = np.full(2 * size - 1, -1.0)
    offdiag[size - 1] = -mu * eta
    return SymTridiagonal(diag, offdiag)

def _sym_kron(a: sympy.Matrix, b: sympy.Matrix) -> sympy.Matrix:
    return sympy.Matrix(a.rows * b.rows, a.cols * b.cols, lambda i, j: a[
    i // b.rows, j // b.cols] * b[i % b.rows, j % b.cols])

def coupled_block_symbolic(T: int) -> tuple[sympy.Matrix, sympy.Symbol,
sympy.Symbol]:
    """ Symbolic coupled block in the free parameters mu and eta. Returns the
        matrix and both symbols """
    if T < 1:
        raise ValidationError(f"Coupled block needs T >= 1, got T={T}")
    mu, eta = sympy.symbols("mu eta", nonnegative=True)
    size = T + 1
    laplacian = sympy.Matrix(_path_laplacian(size).astype(int))
    first = sympy.zeros(size, size)
    first[0, 0] = 1
    last = sympy.zeros(size, size)
    last[size - 1, size - 1] = 1
    coupling = mu * sympy.Matrix([[eta ** 2, -eta], [-eta, 1]])
    block = (_sym_kron(sympy.eye(2), laplacian) + _sym_kron(sympy.diag(1, 0),
    first) + _sym_kron(coupling, last))
    order = _reversed_second_half(T)
    return block.extract(order, order), mu, eta

def coupled_block_ansatz(T: int) -> np.ndarray:
    """ Half-sine trial vector sin(pi (p mod N + 1) / (2N)) with N = T + 1,
        rising towards the junction in both halves """
    size = T + 1
    positions = np.arange(2 * size) % size
    return np.sin(np.pi * (positions + 1) / (2 * size))

def coupled_block_case_positions(T: int) -> dict[str, list[int]]:
    """ Positions of the coupled block belonging to each of the five cases of
        the ansatz evaluation """
    if T < 2:
        raise ValidationError(f"Five-case evaluation needs T >= 2, got T={T}")
    size = T + 1
    return {
        "first": [0],
        "bulk": list(range(1, size - 1)) + list(range(size + 1, 2 * size - 1)),
        "left_junction": [size - 1],
        "right_junction": [size],
        "far_end": [2 * size - 1],
    }

def coupled_block_case_values(params: CoupledBlockParams) -> dict[str, float]:
    """ Closed forms of the local energies of the half-sine ansatz, with
        N = T + 1 """
    if params.T < 2:
        raise ValidationError(f"Five-case evaluation needs T >= 2, got "
        f"T={params.T}")
    n = params.T + 1
    mu, eta = params.mu, params.eta
    half = math.pi / (2 * n)
    return {
        "first": (2 * math.sin(half) - math.sin(2 * half)) / math.sin(half),
        "bulk": 4 * math.sin(half / 2) ** 2,
        "left_junction": 1 + mu * eta ** 2 - math.cos(half) - mu * eta *
        math.sin(half),
        "right_junction": 1 + mu - mu * eta / math.sin(half) - 2 * math.cos(
        half),
        "far_end": 1 - math.sin(math.pi * (n - 1) / (2 * n)),
    }
