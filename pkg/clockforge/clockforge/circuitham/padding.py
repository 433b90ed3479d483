from __future__ import annotations
from dataclasses import dataclass
import math
import numpy as np
from ..errors import ValidationError, ClaimVerificationError
from ..logger import log_warning
from ..spectral import HermitianMatrix, eigvals, kernel_basis, principal_angles
from ..clockham import ClockWeights
from .circuit import Circuit
from .penalty import PenaltyPair
from .hamiltonian import propagation_hamiltonian, acceptance_probability

@dataclass(frozen=True)
class PaddedConstruction:
    """ Propagation Hamiltonian of the padded circuit, the penalty spread over
        both padding windows, and the squared cosine of the smallest angle
        between their kernels. T is the gate count before padding """

    T: int
    hamiltonian: HermitianMatrix
    penalty: HermitianMatrix
    cos2theta: float
    eps: float
    unsat_penalty: float

    @property
    def bound(self) -> float:
        return padded_cos2_bound(self.eps)

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {
            "T": str(self.T),
            "Dimension": str(self.hamiltonian.dim),
            "Epsilon": f"{self.eps:.6f}",
            "cos^2 theta": f"{self.cos2theta:.12g}",
            "Bound": f"{self.bound:.12g}",
            "UNSAT penalty": f"{self.unsat_penalty:.6e}",
        }
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

def padded_cos2_bound(eps: float) -> float:
    """ Provable bound (3 + sqrt(eps)) / 4 on the squared cosine """
    return (3.0 + math.sqrt(eps)) / 4.0

def padded_cos2_exact(T: int, eps: float) -> float:
    """ Closed form ((T/2 + 1)(1 + sqrt(eps)) + T - 1) / (2T + 1) of the squared
        cosine for uniform Kitaev weights. The T - 1 middle clock states carry
        no penalty, and on each window of T/2 + 1 states the best history state
        collects 1 + sqrt(eps) """
    return ((T / 2 + 1) * (1.0 + math.sqrt(eps)) + T - 1) / (2 * T + 1)

def window_penalty(T: int, penalties: PenaltyPair) -> HermitianMatrix:
    """ Pi_in on the clock states 0..T/2 and Pi_out on 3T/2..2T of a clock
        with 2T + 1 states """
    d = penalties.dim
    size = (2 * T + 1) * d
    dense = np.zeros((size, size), dtype=complex)
    for t in range(T // 2 + 1):
        dense[t * d:(t + 1) * d, t * d:(t + 1) * d] = penalties.pi_in.entries
    for t in range(3 * T // 2, 2 * T + 1):
        dense[t * d:(t + 1) * d, t * d:(t + 1) * d] = penalties.pi_out.entries
    return HermitianMatrix(dense)

def padded_construction(circuit: Circuit, penalties: PenaltyPair) -> (
PaddedConstruction):
    """ Pad the circuit with T/2 identity gates on both sides and spread the
        input and output penalties over the padding. The penalty then lies in
        a constant angle to the history states, with cos^2 theta <= (3 +
        sqrt(eps)) / 4, which is checked """
    T = circuit.T
    if T % 2 != 0:
        raise ValidationError(f"Padding needs an even number of gates, got T={T}")
    padded = circuit.padded(T // 2, T // 2)
    hamiltonian = propagation_hamiltonian(ClockWeights.kitaev(2 * T), padded)
    penalty = window_penalty(T, penalties)
    eps = acceptance_probability(circuit, penalties).epsilon
    history = kernel_basis(hamiltonian)
    if history.shape[1] != penalties.dim:
        raise ValidationError(f"Padded Hamiltonian has a kernel of dimension "
        f"{history.shape[1]}, expected {penalties.dim}")
    cosines = principal_angles(HermitianMatrix.projector(history),
    HermitianMatrix.identity(penalty.dim) - penalty)
    cos2theta = float(cosines[0] ** 2) if len(cosines) > 0 else 0.0
    bound = padded_cos2_bound(eps)
    if cos2theta > bound + 1e-9:
        raise ClaimVerificationError(f"cos^2 theta = {cos2theta:.12g} exceeds "
        f"(3 + sqrt(eps)) / 4 = {bound:.12g}")
    if cos2theta > (3.0 + eps) / 4.0 + 1e-9:
        log_warning(f"cos^2 theta = {cos2theta:.6g} exceeds (3 + eps) / 4 at "
        f"eps = {eps:.6g}")
    energy = float(eigvals(hamiltonian + penalty, 1)[0])
    return PaddedConstruction(T, hamiltonian, penalty, cos2theta, eps, max(0.0,
    energy))
