from __future__ import annotations
from dataclasses import dataclass
import math
import numpy as np
import scipy.linalg
from ..config import get_cap
from ..errors import ValidationError, ClaimVerificationError
from ..logger import log_warning
from ..spectral import HermitianMatrix, SymTridiagonal, SpectralMatrix
from ..circuitham import is_unitary

SUPPORT_TOL = 1e-12

def _dense(matrix: SpectralMatrix | np.ndarray) -> np.ndarray:
    if isinstance(matrix, SymTridiagonal):
        return matrix.to_hermitian().entries
    if isinstance(matrix, HermitianMatrix):
        return matrix.entries
    return HermitianMatrix(matrix).entries

def _in_basis(entries: np.ndarray, basis: np.ndarray | None) -> np.ndarray:
    if basis is None:
        return entries
    basis = np.asarray(basis, dtype=complex)
    if basis.shape != entries.shape or not is_unitary(basis):
        raise ValidationError("Basis has to be given as a unitary matrix of "
        "column vectors")
    return basis.conj().T @ entries @ basis

def distance_matrix(entries: np.ndarray, zero_tol: float = 1e-10) -> (
np.ndarray):
    """ dist(u, v), the smallest k with <u|H^k|v> != 0, or -1 if there is none
        up to k = 2 dim. An entry of H^k counts as zero if it is below zero_tol
        times the same entry of |H|^k, which bounds it from above. Both powers
        are rescaled after every step """
    n = entries.shape[0]
    scale = float(np.max(np.abs(entries)))
    dist = np.full((n, n), -1, dtype=int)
    np.fill_diagonal(dist, 0)
    if scale == 0.0 or n == 1:
        return dist
    normalized = entries / scale
    # Entries of H itself below zero_tol relative to its largest entry vanish
    normalized[np.abs(normalized) <= zero_tol] = 0.0
    magnitude = np.abs(normalized)
    power = np.eye(n, dtype=complex)
    bound = np.eye(n)
    for k in range(1, 2 * n + 1):
        power = power @ normalized
        bound = bound @ magnitude
        peak = float(np.max(bound))
        if peak == 0.0:
            break
        power /= peak
        bound /= peak
        found = (dist < 0) & (bound > 0.0) & (np.abs(power) > zero_tol * bound)
        dist[found] = k
        if np.all(dist >= 0):
            break
    return dist

def _max_distance(dist: np.ndarray) -> float:
    if np.any(dist < 0):
        return math.inf
    return float(np.max(dist)) if dist.size > 0 else 0.0

def _ground_weights(entries: np.ndarray) -> np.ndarray:
    _, vectors = scipy.linalg.eigh(entries, subset_by_index=(0, 0))
    return np.abs(vectors[:, 0]) ** 2

def matrix_diameter(matrix: SpectralMatrix | np.ndarray, basis: np.ndarray |
None = None, zero_tol: float = 1e-10) -> tuple[float, float]:
    """ Diameter max_{u, v} dist(u, v) of the operator in the given basis, and
        the diameter restricted to basis states in the support of the ground
        state. Disconnected blocks give an infinite diameter """
    if not zero_tol > 0.0:
        raise ValidationError(f"Zero threshold has to be positive, got "
        f"{zero_tol}")
    entries = _in_basis(_dense(matrix), basis)
    if entries.shape[0] > get_cap("max_dense_dim"):
        raise ValidationError(f"Dimension {entries.shape[0]} exceeds the dense "
        f"cap of {get_cap('max_dense_dim')}")
    dist = distance_matrix(entries, zero_tol)
    support = _ground_weights(entries) > SUPPORT_TOL
    return _max_distance(dist), _max_distance(dist[np.ix_(support, support)])

@dataclass(frozen=True)
class DiameterReport:
    """ Diameter bounds for a Hamiltonian with non-degenerate ground state. The
        normalized gap is the gap divided by the width of the spectrum. The
        Chebyshev bound diam <= 1 + ln(2 / pi_min) / ln(1 + sqrt(2 gap')) is
        checked, on the ground-state support if pi_min vanishes. The stated
        bound gap <= (|H| / 2)(ln(2 / pi_min) / diam)^2 and the refined bound
        diam' <= (1 + 1 / sqrt(2 gap')) ln(2 / pi'_min) are only reported """

    diam: float
    diam_support: float
    pi_min: float
    pi_min_support: float
    gap: float
    normalized_gap: float
    norm: float
    stated_bound: float
    refined_bound: float
    chebyshev_bound: float
    support_mode: bool

    @property
    def stated_holds(self) -> bool:
        return self.gap <= self.stated_bound + 1e-9

    @property
    def refined_holds(self) -> bool:
        return self.diam_support <= self.refined_bound + 1e-9

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {
            "Diameter": str(self.diam),
            "Support diam": str(self.diam_support),
            "pi_min": f"{self.pi_min:.6e}",
            "Gap": f"{self.gap:.6e}",
            "Norm": f"{self.norm:.6g}",
            "Stated bound": f"{self.stated_bound:.6e} ({self.stated_holds})",
            "Refined bound": f"{self.refined_bound:.6g} ({self.refined_holds})",
            "Chebyshev": f"{self.chebyshev_bound:.6g}",
        }
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

def chebyshev_diameter_bound(pi_min: float, normalized_gap: float) -> float:
    """ 1 + ln(2 / pi_min) / ln(1 + sqrt(2 gap')), infinite for a vanishing gap
        """
    if normalized_gap <= 0.0:
        return math.inf
    return 1.0 + math.log(2.0 / pi_min) / math.log1p(math.sqrt(2.0 *
    normalized_gap))

def diameter_bound_check(matrix: SpectralMatrix | np.ndarray, basis:
np.ndarray | None = None, zero_tol: float = 1e-10) -> DiameterReport:
    """ Evaluate the diameter bounds. A ground state amplitude far from zero on
        every basis state forces a short diameter for a large gap, which is
        checked through the Chebyshev bound """
    entries = _in_basis(_dense(matrix), basis)
    if entries.shape[0] < 2:
        raise ValidationError("Diameter bounds need dimension at least 2")
    values = scipy.linalg.eigvalsh(entries)
    gap = float(values[1] - values[0])
    width = float(values[-1] - values[0])
    if width <= 0.0:
        raise ValidationError("Spectrum is a single point")
    normalized_gap = gap / width
    if normalized_gap <= 1e-12:
        log_warning("Ground state is degenerate, the Chebyshev bound is void")
    norm = float(max(abs(values[0]), abs(values[-1])))
    weights = _ground_weights(entries)
    support = weights > SUPPORT_TOL
    pi_min = float(np.min(weights))
    pi_min_support = float(np.min(weights[support]))
    diam, diam_support = matrix_diameter(entries, None, zero_tol)
    support_mode = pi_min <= SUPPORT_TOL or math.isinf(diam)
    if support_mode:
        log_warning("Ground state vanishes on some basis states, using the "
        "support restricted diameter")
        used_diam, used_pi = diam_support, pi_min_support
    else:
        used_diam, used_pi = diam, pi_min
    chebyshev = chebyshev_diameter_bound(used_pi, normalized_gap)
    if used_diam > chebyshev + 1e-9:
        raise ClaimVerificationError(f"Diameter {used_diam} exceeds the "
        f"Chebyshev bound {chebyshev:.6g}")
    if used_diam == 0 or math.isinf(used_diam):
        stated = math.inf
    else:
        stated = norm / 2.0 * (math.log(2.0 / used_pi) / used_diam) ** 2
    if normalized_gap > 0.0:
        refined = (1.0 + 1.0 / math.sqrt(2.0 * normalized_gap)) * math.log(2.0 /
        pi_min_support)
    else:
        refined = math.inf
    report = DiameterReport(diam, diam_support, pi_min, pi_min_support, gap,
    normalized_gap, norm, stated, refined, chebyshev, support_mode)
    if not report.stated_holds:
        log_warning(f"Gap {gap:.6g} exceeds the stated diameter bound "
        f"{stated:.6g}")
    return report
