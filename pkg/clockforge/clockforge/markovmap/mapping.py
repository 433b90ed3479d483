from __future__ import annotations
from dataclasses import dataclass
import math
import numpy as np
from ..config import get_tolerance
from ..errors import ValidationError, NumericalError, ReducibleClockError
from ..logger import log_warning, log_info
from ..spectral import (HermitianMatrix, SymTridiagonal, eigvals, ground_state,
spectral_gap)
from .chain import MarkovChain
from .conductance import conductance, cheeger_bounds
from .birth_death import BirthDeathReport, birth_death_bounds

@dataclass(frozen=True)
class ClassicalMapping:
    """ Markov chain P(t, t') = psi_t' G(t, t') / psi_t with G = (I - H) / (1 -
        E) for the shifted Hamiltonian H = (M - shift) / scale. The vector psi
        is the ground state of M in its original basis, and the chain has
        stationary distribution |psi|^2 """

    chain: MarkovChain
    hamiltonian: SymTridiagonal
    energy: float
    shift: float
    scale: float
    psi: np.ndarray

    @property
    def shifted_energy(self) -> float:
        return (self.energy - self.shift) / self.scale

    def expected_gap(self, hamiltonian_gap: float) -> float:
        """ Gap of the chain predicted from the gap of the unshifted operator.
            P has eigenvalues (1 - E_k) / (1 - E_0) of the shifted operator, so
            its gap is gap / (scale (1 - E')). For E' = 0 this coincides
            with (1 - E') gap / scale """
        return hamiltonian_gap / (self.scale * (1.0 - self.shifted_energy))

def _as_tridiagonal(matrix: SymTridiagonal | HermitianMatrix) -> SymTridiagonal:
    if isinstance(matrix, SymTridiagonal):
        if matrix.is_stoquastic():
            return matrix
        # Flip the signs of positive couplings, which is a real gauge
        signs = np.concatenate([[1.0], np.cumprod(np.where(matrix.offdiag > 0.0,
        -1.0, 1.0))])
        phases = signs if matrix.phases is None else matrix.phases * signs
        return SymTridiagonal(matrix.diag, -np.abs(matrix.offdiag), phases)
    return SymTridiagonal.from_hermitian(matrix)

def _check_irreducible(matrix: SymTridiagonal):
    couplings = np.abs(matrix.offdiag)
    threshold = get_tolerance("tol") * max(1.0, matrix.gershgorin_norm)
    cuts = np.flatnonzero(couplings <= threshold)
    if len(cuts) > 0:
        raise ReducibleClockError(int(cuts[0]), f"Transition amplitude b_"
        f"{int(cuts[0])} vanishes, the clock splits into two blocks")

def positive_ground_ratios(matrix: SymTridiagonal, energy: float, twist: int |
None = None) -> np.ndarray:
    """ Ratios psi_{t+1} / psi_t of the positive ground state of an irreducible
        stoquastic tridiagonal matrix, from a twisted factorization of M - E.
        Left of the twist index the ratios come from the forward pivots, right
        of it from the backward pivots, so no ratio is taken from a vanishing
        pivot. No amplitudes are formed, which avoids underflow in the tails.
        Without a given twist index the smallest twisted pivot picks it """
    diag = matrix.diag - energy
    couplings = -matrix.offdiag
    n = len(diag)
    forward = np.empty(n)
    forward[0] = diag[0]
    for t in range(1, n):
        forward[t] = diag[t] - couplings[t - 1] ** 2 / forward[t - 1] if (
        forward[t - 1] != 0.0) else -np.inf
    backward = np.empty(n)
    backward[-1] = diag[-1]
    for t in range(n - 2, -1, -1):
        backward[t] = diag[t] - couplings[t] ** 2 / backward[t + 1] if (
        backward[t + 1] != 0.0) else -np.inf
    pivots = forward + backward - diag
    if twist is not None and not 0 <= twist < n:
        raise ValidationError(f"Twist index {twist} out of range for dimension "
        f"{n}")
    k = int(np.argmin(np.abs(pivots))) if twist is None else twist
    ratios = np.empty(n - 1)
    # psi_t / psi_{t+1} = couplings_t / forward_t left of the twist
    ratios[:k] = forward[:k] / couplings[:k]
    # psi_{t+1} / psi_t = couplings_t / backward_{t+1} right of it
    ratios[k:] = couplings[k:] / backward[k + 1:]
    if not np.all(np.isfinite(ratios)) or np.any(ratios <= 0.0):
        raise NumericalError("Ground state of the stoquastic clock is not "
        "strictly positive", float(np.min(np.abs(pivots))))
    return ratios

def _seeded_ratios(matrix: SymTridiagonal, energy: float, psi: np.ndarray) -> (
np.ndarray):
    """ Twisted ratios with the twist at the largest amplitude of a supplied
        ground state. Where both amplitudes are above 1e-3 of the largest one,
        |psi_{t+1}| / |psi_t| has to agree with them, otherwise the vector is
        not the ground state """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (matrix.dim,):
        raise ValidationError(f"Ground state has shape {psi.shape}, expected "
        f"({matrix.dim},)")
    magnitudes = np.abs(psi)
    if not np.max(magnitudes) > 0.0:
        raise ValidationError("Ground state vector is zero")
    magnitudes = magnitudes / np.max(magnitudes)
    ratios = positive_ground_ratios(matrix, energy, int(np.argmax(magnitudes)))
    resolved = (magnitudes[:-1] > 1e-3) & (magnitudes[1:] > 1e-3)
    supplied = magnitudes[1:][resolved] / magnitudes[:-1][resolved]
    deviation = float(np.max(np.abs(supplied / ratios[resolved] - 1.0),
    initial=0.0))
    if deviation > math.sqrt(get_tolerance("tol")):
        raise ValidationError(f"Supplied vector is not the ground state, its "
        f"amplitude ratios differ by {deviation:.3e}")
    return ratios

def _amplitudes(ratios: np.ndarray) -> np.ndarray:
    logs = np.concatenate([[0.0], np.cumsum(np.log(ratios))])
    amplitudes = np.exp(logs - np.max(logs))
    return amplitudes / np.linalg.norm(amplitudes)

def quantum_to_classical(matrix: SymTridiagonal | HermitianMatrix, ground:
tuple[float, np.ndarray] | None = None) -> ClassicalMapping:
    """ Map a tridiagonal Hermitian matrix with arbitrary complex off-diagonal
        entries to a reversible Markov chain. The operator is first gauged to
        real non-positive couplings. If its diagonal does not already lie in
        [0, 1] with ground energy in [0, 1), it is shifted to (M - E) / s with
        s = max(1, max_t (a_t - E)), so that the shifted ground energy is 0.
        The chain gap is the gap of the shifted operator divided by 1 - E'.
        A supplied ground pair (E, psi) replaces the eigenvalue computation. The
        largest amplitude of psi places the twist of the factorization, and
        psi is rejected if its resolved amplitude ratios disagree """
    gauged = _as_tridiagonal(matrix)
    _check_irreducible(gauged)
    if ground is not None:
        energy = float(ground[0])
    else:
        energy = float(eigvals(gauged.gauged(), 1)[0])
    if gauged.dim == 1:
        return ClassicalMapping(MarkovChain([[1.0]], [1.0]), gauged.gauged(),
        energy, energy, 1.0, gauged.to_original(np.ones(1)))
    if np.min(gauged.diag) >= 0.0 and np.max(gauged.diag) <= 1.0 and (
    0.0 <= energy < 1.0):
        shift, scale = 0.0, 1.0
    else:
        shift = energy
        scale = max(1.0, float(np.max(gauged.diag - energy)))
        log_info(f"Shifting clock by {shift:.6g} and scaling by {scale:.6g}")
    shifted = gauged.gauged().shifted(shift, scale)
    shifted_energy = (energy - shift) / scale
    if ground is not None:
        ratios = _seeded_ratios(shifted, shifted_energy, ground[1])
    else:
        ratios = positive_ground_ratios(shifted, shifted_energy)
    couplings = -shifted.offdiag / (1.0 - shifted_energy)
    P = np.diag(couplings * ratios, 1) + np.diag(couplings / ratios, -1)
    diagonal = (1.0 - shifted.diag) / (1.0 - shifted_energy)
    np.fill_diagonal(P, diagonal)
    if np.min(P) < -1e-12:
        raise NumericalError(f"Mapped chain has negative entry "
        f"{np.min(P):.3e}", float(-np.min(P)))
    P = np.clip(P, 0.0, None)
    row_defect = float(np.max(np.abs(P.sum(axis=1) - 1.0)))
    if row_defect > math.sqrt(get_tolerance("stochastic")):
        raise NumericalError("Mapped chain is not stochastic", row_defect)
    P /= P.sum(axis=1, keepdims=True)
    amplitudes = _amplitudes(ratios)
    chain = MarkovChain(P, amplitudes ** 2)
    return ClassicalMapping(chain, shifted, energy, shift, scale,
    gauged.to_original(amplitudes))

def orthogonal_excitation(matrix: SymTridiagonal | HermitianMatrix, psi:
np.ndarray, tprime: int) -> np.ndarray:
    """ For a clock that splits between tprime and tprime + 1, the vector equal
        to psi_t / w_left left of the cut and -psi_t / w_right right of it, with
        w the weight of psi on either side. It is orthogonal to psi and, if psi
        is an eigenvector, an eigenvector with the same eigenvalue, so the gap
        vanishes. The result is not normalized """
    gauged = _as_tridiagonal(matrix)
    psi = np.asarray(psi, dtype=complex)
    if len(psi) != gauged.dim:
        raise ValidationError(f"Vector has length {len(psi)}, expected "
        f"{gauged.dim}")
    if not 0 <= tprime < gauged.dim - 1:
        raise ValidationError(f"Cut {tprime} out of range for {gauged.dim} "
        f"clock states")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-9:
        raise ValidationError("Vector has to be normalized")
    if abs(gauged.offdiag[tprime]) > get_tolerance("tol") * max(1.0,
    gauged.gershgorin_norm):
        raise ValidationError(f"Transition amplitude at cut {tprime} does not "
        f"vanish")
    weights = np.abs(psi) ** 2
    left = float(np.sum(weights[:tprime + 1]))
    right = float(np.sum(weights[tprime + 1:]))
    if left <= 0.0 or right <= 0.0:
        raise ValidationError(f"Vector has no weight on one side of cut "
        f"{tprime}")
    excitation = psi.copy()
    excitation[:tprime + 1] /= left
    excitation[tprime + 1:] /= -right
    return excitation

@dataclass(frozen=True)
class ProductBound:
    """ Product of the gap and the smaller endpoint weight of the ground state.
        For a degenerate ground state the product is reported as 0 """

    gap: float
    endpoint: float
    product: float
    degenerate: bool

def tridiag_product_bound(matrix: SymTridiagonal | HermitianMatrix) -> (
ProductBound):
    """ gap * min(|psi_0|^2, |psi_T|^2) for a tridiagonal clock, which is
        O(1/T^2) for normalized weights """
    tridiagonal = _as_tridiagonal(matrix)
    if (np.max(np.abs(tridiagonal.diag)) > 1.0 + 1e-12 or
    np.max(np.abs(tridiagonal.offdiag), initial=0.0) > 1.0 + 1e-12):
        log_warning("Clock weights exceed 1, the product bound assumes "
        "normalized weights")
    state = ground_state(tridiagonal)
    gap = spectral_gap(tridiagonal)
    weights = np.abs(state.vector) ** 2
    endpoint = float(min(weights[0], weights[-1]))
    if state.degenerate:
        log_warning("Ground state is degenerate, product reported as 0")
        return ProductBound(gap, endpoint, 0.0, True)
    return ProductBound(gap, endpoint, gap * endpoint, False)

@dataclass(frozen=True)
class MappingReport:
    """ Combined checks of the mapped chain: gap relation, Cheeger sandwich and
        birth-death sandwich. For a reducible clock the chain checks are
        skipped, and the orthogonal excitation certifies a vanishing gap """

    hamiltonian_gap: float
    chain_gap: float | None = None
    gap_defect: float | None = None
    conductance: float | None = None
    cheeger: tuple[float, float] | None = None
    birth_death: BirthDeathReport | None = None
    cut: int | None = None
    excitation_residual: float | None = None

    @property
    def reducible(self) -> bool:
        return self.cut is not None

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {"Hamiltonian gap": f"{self.hamiltonian_gap:.6e}"}
        if self.reducible:
            items["Cut"] = str(self.cut)
            if self.excitation_residual is not None:
                items["Residual"] = f"{self.excitation_residual:.3e}"
        else:
            items["Chain gap"] = f"{self.chain_gap:.6e}"
            items["Gap defect"] = f"{self.gap_defect:.3e}"
            items["Conductance"] = f"{self.conductance:.6e}"
            items["Cheeger"] = (f"[{self.cheeger[0]:.6e}, "
            f"{self.cheeger[1]:.6e}]")
            items["ell"] = f"{self.birth_death.ell:.6g}"
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

def _reducible_report(matrix: SymTridiagonal, cut: int) -> MappingReport:
    state = ground_state(matrix)
    gap = spectral_gap(matrix)
    weights = np.abs(state.vector) ** 2
    if min(weights[:cut + 1].sum(), weights[cut + 1:].sum()) <= 1e-12:
        log_warning(f"Ground state lives on one side of cut {cut}, no "
        f"orthogonal excitation")
        return MappingReport(gap, cut=cut)
    excitation = orthogonal_excitation(matrix, state.vector, cut)
    residual = np.linalg.norm(_apply(matrix, excitation) - state.energy *
    excitation) / np.linalg.norm(excitation)
    return MappingReport(gap, cut=cut, excitation_residual=float(residual))

def _apply(matrix: SymTridiagonal, vector: np.ndarray) -> np.ndarray:
    """ Product of the operator with a vector in the original basis """
    if matrix.phases is None:
        return matrix.matvec(vector)
    return matrix.phases * matrix.matvec(matrix.phases.conj() * vector)

def mapping_report(matrix: SymTridiagonal | HermitianMatrix) -> MappingReport:
    """ Run the mapping and check the gap relation, the Cheeger inequality and
        the birth-death bounds on the resulting chain """
    gauged = _as_tridiagonal(matrix)
    hamiltonian_gap = spectral_gap(gauged)
    try:
        mapping = quantum_to_classical(gauged)
    except ReducibleClockError as error:
        log_warning(str(error))
        return _reducible_report(gauged, error.cut)
    chain_gap = mapping.chain.spectral_gap()
    defect = abs(chain_gap - mapping.expected_gap(hamiltonian_gap))
    phi = conductance(mapping.chain)
    lower, upper = cheeger_bounds(min(1.0, phi))
    return MappingReport(hamiltonian_gap, chain_gap, defect, phi, (lower,
    upper), birth_death_bounds(mapping.chain))
