from __future__ import annotations
from typing import Iterable
import math
import numpy as np
from ..config import get_tolerance
from ..errors import ValidationError
from ..spectral import HermitianMatrix, SymTridiagonal

def stoquastic_ratios(matrix: HermitianMatrix | SymTridiagonal, phi:
Iterable[float]) -> np.ndarray:
    """ The local energies <t|H phi> / phi_t of a positive trial vector. For a
        stoquastic H the smallest of them is a lower bound on the ground energy
        """
    phi = np.asarray(list(phi), dtype=float)
    if isinstance(matrix, SymTridiagonal) and matrix.phases is not None:
        matrix = matrix.to_hermitian()
    if len(phi) != matrix.dim:
        raise ValidationError(f"Trial vector has length {len(phi)}, expected "
        f"{matrix.dim}")
    if not np.all(phi > 0.0):
        raise ValidationError("Trial vector needs strictly positive entries")
    if not matrix.is_stoquastic(get_tolerance("stoquastic")):
        raise ValidationError("Matrix is not stoquastic in the clock basis")
    if isinstance(matrix, SymTridiagonal):
        image = matrix.matvec(phi)
    else:
        image = (matrix.entries @ phi).real
    return image / phi

def stoquastic_lower_bound(matrix: HermitianMatrix | SymTridiagonal, phi:
Iterable[float]) -> float:
    """ Lower bound min_t <t|H phi> / phi_t on the ground energy of a stoquastic
        matrix. The trial vector does not need to be normalized """
    return float(np.min(stoquastic_ratios(matrix, phi)))

def endpoint_penalized_clock(T: int) -> SymTridiagonal:
    """ Path Laplacian with unit penalties on both endpoints, which is
        tridiag(-1, 2, -1) on T + 1 sites """
    if T < 1:
        raise ValidationError(f"Clock needs T >= 1, got T={T}")
    return SymTridiagonal(np.full(T + 1, 2.0), np.full(T, -1.0))

def dirichlet_ground_energy(T: int) -> float:
    """ Ground energy 2 - 2 cos(pi / (T + 2)) of the endpoint-penalized clock
        """
    return 2.0 - 2.0 * math.cos(math.pi / (T + 2))

def sine_ansatz(T: int) -> np.ndarray:
    """ Positive trial vector sin(pi (t + 1) / (T + 2)) for t = 0,..,T, which is
        the exact ground state of the endpoint-penalized clock """
    return np.sin(np.pi * np.arange(1, T + 2) / (T + 2))
