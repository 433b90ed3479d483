from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable
import numpy as np
import scipy.optimize
from ..errors import ValidationError, NumericalError
from ..logger import log_info, log_warning
from ..spectral import (SymTridiagonal, SpectralMatrix, eigvals,
eig_hermitian, eig_tridiagonal, ground_state, spectral_gap)
from ..clockham import heavy_endpoint_matrix
from .schedule import (Schedule, interpolate, clock_initial_hamiltonian,
dense_form)

@dataclass(frozen=True)
class GapCurve:
    """ Two lowest energies and their gap along a grid of schedule parameters,
        plus the refined minimum gap """

    s: np.ndarray
    e0: np.ndarray
    e1: np.ndarray
    gap: np.ndarray
    s_min: float
    gap_min: float

    def __len__(self) -> int:
        return len(self.s)

    def rows(self) -> list[tuple[float, float, float, float]]:
        """ Rows (s, E0, E1, gap) in order of s """
        return [(float(a), float(b), float(c), float(d)) for a, b, c, d in zip(
        self.s, self.e0, self.e1, self.gap)]

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {
            "Grid points": str(len(self.s)),
            "Minimum gap": f"{self.gap_min:.6e}",
            "At s": f"{self.s_min:.6f}",
        }
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

def _grid(grid: int | Iterable[float]) -> np.ndarray:
    if isinstance(grid, int):
        if grid < 2:
            raise ValidationError(f"Grid needs at least two points, got {grid}")
        return np.linspace(0.0, 1.0, grid)
    values = np.asarray(list(grid), dtype=float)
    if len(values) < 2:
        raise ValidationError("Grid needs at least two points")
    if np.min(values) < 0.0 or np.max(values) > 1.0:
        raise ValidationError("Grid values have to lie in [0, 1]")
    if np.any(np.diff(values) <= 0.0):
        raise ValidationError("Grid values have to be strictly increasing")
    return values

def _lowest_pair(schedule: Schedule, s: float) -> tuple[float, float]:
    values = eigvals(interpolate(schedule, s), 2)
    return float(values[0]), float(values[1])

def gap_sweep(schedule: Schedule, grid: int | Iterable[float] = 201, jobs: int
= 1) -> GapCurve:
    """ Spectral gap along the grid. Grid points are independent and are
        evaluated on jobs threads, results keep the order of the grid. The
        minimum is refined by bounded scalar minimization between the
        neighbours of the best grid point """
    values = _grid(grid)
    if schedule.dim < 2:
        raise ValidationError("Gap sweep needs dimension at least 2")
    if jobs < 1:
        raise ValidationError(f"Number of jobs has to be positive, got {jobs}")
    if jobs == 1:
        pairs = [_lowest_pair(schedule, s) for s in values]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            pairs = list(pool.map(lambda s: _lowest_pair(schedule, s), values))
    e0 = np.array([pair[0] for pair in pairs])
    e1 = np.array([pair[1] for pair in pairs])
    gap = e1 - e0
    index = int(np.argmin(gap))
    low = values[max(0, index - 1)]
    high = values[min(len(values) - 1, index + 1)]
    s_min, gap_min = float(values[index]), float(gap[index])
    result = scipy.optimize.minimize_scalar(lambda s: spectral_gap(interpolate(
    schedule, float(np.clip(s, 0.0, 1.0)))), bounds=(low, high),
    method="bounded", options={"xatol": 1e-4})
    if result.success and result.fun < gap_min:
        s_min, gap_min = float(result.x), float(result.fun)
    log_info(f"Minimum gap {gap_min:.6e} at s={s_min:.6f}")
    return GapCurve(values, e0, e1, gap, s_min, gap_min)

@dataclass(frozen=True)
class MonotoneReport:
    """ Whether the first excited energy is non-decreasing along the grid, with
        the first parameter where it dropped """

    monotone: bool
    first_violation: float | None
    max_drop: float

def _is_psd(matrix: SpectralMatrix) -> bool:
    lowest = float(eigvals(matrix, 1)[0])
    return lowest >= -1e-10 * max(1.0, abs(lowest))

def monotone_excited_check(schedule: Schedule, grid: int | Iterable[float] =
201) -> MonotoneReport:
    """ Check E_1(s) is non-decreasing within 1e-9 for the modified schedule,
        whose increments s A H_final are positive semi-definite so that Weyl's
        inequality applies """
    if schedule.kind != "modified-scaled":
        raise ValidationError("Monotonicity needs the modified schedule with "
        "positive semi-definite increments")
    if not _is_psd(schedule.h_final):
        raise ValidationError("Final Hamiltonian is not positive semi-definite")
    values = _grid(grid)
    e1 = np.array([_lowest_pair(schedule, s)[1] for s in values])
    drops = e1[:-1] - e1[1:]
    violations = np.flatnonzero(drops > 1e-9)
    first = float(values[violations[0] + 1]) if len(violations) > 0 else None
    return MonotoneReport(len(violations) == 0, first, float(max(0.0,
    np.max(drops))))

@dataclass(frozen=True)
class OverlapEstimate:
    """ Overlap of the final ground state of the modified schedule with the
        ground state of H_final, its deviation from one, the first order
        perturbative bound on the deviation of the states, and the actual
        2-norm distance of the phase-aligned states """

    overlap: float
    deviation: float
    first_order_bound: float
    norm_deviation: float

def _eigensystem(matrix: SpectralMatrix) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(matrix, SymTridiagonal):
        decomposition = eig_tridiagonal(matrix)
    else:
        decomposition = eig_hermitian(matrix)
    return decomposition.eigenvalues, decomposition.eigenvectors

def final_overlap_estimate(schedule: Schedule) -> OverlapEstimate:
    """ Compare the ground state of H_final + H_init / A with the ground state
        of H_final. To first order in 1/A the deviation is bounded by
        sum_k |<psi_0|H_init|psi_k>| / (A gap) """
    if schedule.kind != "modified-scaled":
        raise ValidationError("Overlap estimate needs the modified schedule")
    energies, vectors = _eigensystem(schedule.h_final)
    if schedule.dim < 2:
        raise ValidationError("Overlap estimate needs dimension at least 2")
    gap = float(energies[1] - energies[0])
    if gap <= 1e-12 * max(1.0, abs(energies[-1])):
        raise NumericalError("Ground state of the final Hamiltonian is "
        "degenerate", gap)
    unperturbed = vectors[:, 0]
    initial = dense_form(schedule.h_init).entries
    couplings = vectors[:, 1:].conj().T @ (initial @ unperturbed)
    bound = float(np.sum(np.abs(couplings))) / (schedule.A * gap)
    perturbed = ground_state(interpolate(schedule, 1.0)).vector
    inner = complex(np.vdot(perturbed, unperturbed))
    overlap = min(1.0, abs(inner))
    if abs(inner) > 0.0:
        perturbed = perturbed * (inner / abs(inner))
    distance = float(np.linalg.norm(perturbed - unperturbed))
    return OverlapEstimate(overlap, 1.0 - overlap, bound, distance)

def endpoint_probability(matrix: SpectralMatrix, t: int) -> float:
    """ Weight |<t|psi_0>|^2 of the ground state on clock state t """
    if not 0 <= t < matrix.dim:
        raise ValidationError(f"Clock state {t} out of range for dimension "
        f"{matrix.dim}")
    state = ground_state(matrix)
    if state.degenerate:
        log_warning("Ground state is degenerate, endpoint weight depends on the "
        "chosen representative")
    return float(abs(state.vector[t]) ** 2)

def trial_energy_check(T: int) -> float:
    """ Energy <phi|H_init|phi> = 1 - |phi_0|^2 of the ground state of the
        heavy-endpoint clock, which is 3/4 since its start weight is 1/4 """
    phi = ground_state(heavy_endpoint_matrix(T)).vector
    return clock_initial_hamiltonian(T).to_hermitian().expectation(phi)
