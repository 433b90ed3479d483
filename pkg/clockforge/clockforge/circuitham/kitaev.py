from __future__ import annotations
from dataclasses import dataclass
import math
import numpy as np
import scipy.linalg
from ..config import get_tolerance
from ..errors import HypothesisError, NumericalError, ClaimVerificationError
from ..logger import log_warning
from ..spectral import HermitianMatrix, range_basis
from .penalty import PenaltyPair
from .hamiltonian import acceptance_of_unitary

@dataclass(frozen=True)
class JordanBlock:
    """ Two-dimensional block of a projector pair. The block of U^dagger Pi_out
        U in the basis (a, b) adapted to range Pi_in is [[lambda, xi], [xi*,
        mu]], and eta relates them by lambda = eta^2 mu and |xi| = eta mu """

    cosine: float
    lambda_: float
    mu: float
    xi: complex
    eta: float

    @property
    def trace(self) -> float:
        return self.lambda_ + self.mu

@dataclass(frozen=True)
class ProjectorPairReport:
    """ All Jordan blocks of a NO instance together with its acceptance
        probability. The enforced bounds are mu >= 1 - eps, lambda <= eps,
        |xi| <= sqrt(eps) and eta <= sqrt(eps / (1 - eps)). The sharper bounds
        lambda <= eps / 2 and |xi| <= sqrt(eps / 2) fail whenever the largest
        block saturates lambda = eps and are only flagged """

    blocks: tuple[JordanBlock, ...]
    eps: float
    sharp_bounds_hold: bool

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {
            "Blocks": str(len(self.blocks)),
            "Epsilon": f"{self.eps:.6f}",
            "Max lambda": f"{max(b.lambda_ for b in self.blocks):.6f}",
            "Min mu": f"{min(b.mu for b in self.blocks):.6f}",
            "Max eta": f"{max(b.eta for b in self.blocks):.6f}",
            "Sharp bounds": str(self.sharp_bounds_hold),
        }
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

def _check_hypotheses(penalties: PenaltyPair, rotated: HermitianMatrix):
    d = penalties.dim
    for name, projector in (("Pi_in", penalties.pi_in), ("U^dagger Pi_out U",
    rotated)):
        rank = int(round(projector.trace))
        if 2 * rank != d:
            raise HypothesisError("half-rank", f"{name} has rank {rank}, "
            f"expected {d // 2}")
    lowest = float(scipy.linalg.eigvalsh((penalties.pi_in + rotated).entries,
    subset_by_index=(0, 0))[0])
    if lowest <= get_tolerance("kernel"):
        raise HypothesisError("full-rank", "Pi_in + U^dagger Pi_out U is "
        "singular, a valid input is accepted with certainty")

def projector_pair_quantities(penalties: PenaltyPair, unitary: np.ndarray) -> (
ProjectorPairReport):
    """ Decompose the range of Pi_in and of U^dagger Pi_out U into pairs of
        principal vectors a_i, f_i with <a_i|f_i> = s_i, and evaluate U^dagger
        Pi_out U on the orthonormal pair (a_i, b_i) with b_i the normalized
        part of f_i orthogonal to a_i. Requires both projectors to have rank
        d / 2 and their sum to be invertible """
    unitary = np.asarray(unitary, dtype=complex)
    rotated = penalties.pi_out.conjugate_by(unitary)
    _check_hypotheses(penalties, rotated)
    eps = acceptance_of_unitary(unitary, penalties).epsilon
    basis_in = range_basis(penalties.pi_in)
    basis_rot = range_basis(rotated)
    left, cosines, right_h = scipy.linalg.svd(basis_in.conj().T @ basis_rot)
    rotated_entries = rotated.entries
    blocks = []
    for i, s in enumerate(np.clip(cosines, 0.0, 1.0)):
        a = basis_in @ left[:, i]
        f = basis_rot @ right_h[i].conj()
        sine = math.sqrt(max(0.0, 1.0 - s * s))
        if sine <= get_tolerance("kernel"):
            raise NumericalError(f"Block {i} has a vanishing sine, the ranges "
            f"intersect", sine)
        b = (f - s * a) / sine
        lambda_ = float(np.real(a.conj() @ rotated_entries @ a))
        mu = float(np.real(b.conj() @ rotated_entries @ b))
        xi = complex(a.conj() @ rotated_entries @ b)
        eta = math.sqrt(max(0.0, lambda_) / mu)
        blocks.append(JordanBlock(float(s), lambda_, mu, xi, eta))
    _check_identities(blocks)
    report = ProjectorPairReport(tuple(blocks), eps, _sharp_bounds(blocks, eps))
    _check_bounds(report)
    return report

def _check_identities(blocks: list[JordanBlock]):
    tol = 1e-9
    for i, block in enumerate(blocks):
        defects = (abs(block.trace - 1.0), abs(block.lambda_ - block.eta ** 2 *
        block.mu), abs(abs(block.xi) - block.eta * block.mu))
        if max(defects) > tol:
            raise NumericalError(f"Block {i} is not a rank one projector",
            max(defects))

def _sharp_bounds(blocks: list[JordanBlock], eps: float) -> bool:
    slack = 1e-9
    holds = all(block.lambda_ <= eps / 2 + slack and abs(block.xi) <=
    math.sqrt(eps / 2) + slack for block in blocks)
    if not holds:
        log_warning(f"Sharper block bounds lambda <= eps / 2 and |xi| <= "
        f"sqrt(eps / 2) fail at eps = {eps:.6g}")
    return holds

def _check_bounds(report: ProjectorPairReport):
    slack = 1e-9
    eps = report.eps
    eta_bound = math.sqrt(eps / (1.0 - eps)) if eps < 1.0 else math.inf
    for i, block in enumerate(report.blocks):
        if block.mu < 1.0 - eps - slack:
            raise ClaimVerificationError(f"Block {i}: mu = {block.mu:.12g} < "
            f"1 - eps = {1.0 - eps:.12g}")
        if block.lambda_ > eps + slack:
            raise ClaimVerificationError(f"Block {i}: lambda = "
            f"{block.lambda_:.12g} > eps = {eps:.12g}")
        if abs(block.xi) > math.sqrt(eps) + slack:
            raise ClaimVerificationError(f"Block {i}: |xi| = {abs(block.xi):.12g}"
            f" > sqrt(eps) = {math.sqrt(eps):.12g}")
        if block.eta > eta_bound + slack:
            raise ClaimVerificationError(f"Block {i}: eta = {block.eta:.12g} > "
            f"{eta_bound:.12g}")
